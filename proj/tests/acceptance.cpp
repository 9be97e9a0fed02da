// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "comod/comod.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace comod;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::vector<Poset> labeled_posets_up_to(std::size_t n) {
  std::vector<Poset> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& p : oracle::all_labeled_posets(k)) out.push_back(std::move(p));
  return out;
}

const std::vector<corpus::Entry>& shared_corpus() {
  static const std::vector<corpus::Entry> c = corpus::lattices();
  return c;
}

Outcome order_congruence_comodernistic() {
  auto posets = labeled_posets_up_to(4);
  const std::size_t four = oracle::all_labeled_posets(4).size();
  if (four != 219) return fail("expected 219 labeled posets on 4 elements, found " + std::to_string(four));
  for (const auto& p : posets)
    if (!is_comodernistic(order_congruence_lattice(p).lattice)) return fail(corpus::poset_name(p) + " not comodernistic");
  return {true, std::to_string(posets.size()) + " labeled posets"};
}

Outcome cl_labelings_valid() {
  for (const auto& e : shared_corpus()) {
    auto lab = comodernistic_labeling(e.lattice);
    auto r = verify_cl(lab);
    if (!r.ok) return fail(e.name + ": " + r.violation->reason);
  }
  return {true, std::to_string(shared_corpus().size()) + " lattices"};
}

Outcome mobius_agreement() {
  for (const auto& e : shared_corpus()) {
    auto lab = comodernistic_labeling(e.lattice);
    const long long brute = mobius_brute(e.lattice);
    const long long labels = mobius_from_labeling(lab);
    if (brute != labels)
      return fail(e.name + ": labeling " + std::to_string(labels) + " vs brute " + std::to_string(brute));
    if (e.lattice.size() > 1) {
      const long long chi = euler_characteristic(order_complex(e.lattice.poset()));
      if (chi != brute) return fail(e.name + ": reduced Euler characteristic " + std::to_string(chi));
    }
  }
  return {true, std::to_string(shared_corpus().size()) + " lattices"};
}

Outcome linear_extension_correspondence() {
  std::size_t checked = 0;
  for (const auto& p : labeled_posets_up_to(5)) {
    if (!is_hasse_connected(p)) continue;
    auto fam = order_congruence_lattice(p);
    auto lab = comodernistic_labeling(fam.lattice);
    const auto le = count_linear_extensions(p);
    const auto dec = decreasing_chains(lab).size();
    const long long mu = mobius_brute(fam.lattice);
    if (dec != le || static_cast<std::uint64_t>(std::llabs(mu)) != le)
      return fail(corpus::poset_name(p) + ": LE " + std::to_string(le) + ", decreasing " + std::to_string(dec) +
                  ", mu " + std::to_string(mu));
    ++checked;
  }
  return {true, std::to_string(checked) + " Hasse-connected labeled posets"};
}

Outcome mobius_recursion() {
  std::size_t checked = 0;
  for (const auto& p : labeled_posets_up_to(4)) {
    if (p.size() < 2) continue;
    const long long mu = mobius_brute(order_congruence_lattice(p).lattice);
    for (Id x : p.maximal_elements()) {
      long long sum = 0;
      for (Id y = 0; y < p.size(); ++y)
        if (compatible(p, x, y)) sum += mobius_brute(order_congruence_lattice(quotient(p, x, y)).lattice);
      if (mu != -sum) return fail(corpus::poset_name(p) + " at x=" + std::to_string(x));
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (P, x) pairs"};
}

Outcome lexicographic_shelling() {
  std::size_t checked = 0;
  for (const auto& e : shared_corpus()) {
    const auto& l = e.lattice;
    if (l.size() < 2 || count_maximal_chains(l.poset(), l.bottom(), l.top(), 10001) > 10000) continue;
    auto r = verify_lex_shelling(comodernistic_labeling(l), 10000);
    if (!r.ok) return fail(e.name + ": facet at position " + std::to_string(r.position));
    ++checked;
  }
  return {true, std::to_string(checked) + " lattices"};
}

Outcome group_equivalence() {
  std::size_t checked = 0;
  for (const auto& s : stock_groups()) {
    Group g = make_group(s);
    if (g.order() != s.order) return fail(s.name + " has order " + std::to_string(g.order()));
    auto lg = subgroup_lattice(g);
    const bool solvable = is_solvable(g);
    const bool comod = is_comodernistic(lg.lattice);
    if (solvable != comod) return fail(s.name + " disagrees");
    if (s.name == "A5" && (solvable || lg.lattice.size() != 59)) return fail("A5 control");
    ++checked;
  }
  return {true, std::to_string(checked) + " groups, A5 negative"};
}

Outcome negative_controls() {
  for (std::size_t n = 4; n <= 6; ++n) {
    Lattice l = ngon_face_lattice(n);
    if (is_modernistic(l) || is_comodernistic(l)) return fail(std::to_string(n) + "-gon passes a test");
  }
  Lattice b3 = boolean_lattice(3);
  auto lab = ss_el_labeling(b3, *find_m_chain(b3));
  if (!verify_cl(lab).ok) return fail("uncorrupted labeling rejected");
  auto bad = relabel(lab, [&](const WalkerState& s, Id next, int label) {
    if (s.current != b3.bottom()) return label;
    if (next == 1) return lab.step(s, 2).first;
    if (next == 2) return lab.step(s, 1).first;
    return label;
  });
  auto r = verify_cl(bad);
  if (r.ok || !r.violation) return fail("corrupted labeling accepted");
  return {true, "certificate [" + b3.label(r.violation->x) + ", " + b3.label(r.violation->y) + "]: " +
                    r.violation->reason};
}

Outcome lemma_suites() {
  std::mt19937 rng(7);
  for (int sample = 0; sample < 1000; ++sample) {
    Lattice l = oracle::random_lattice(rng, 9);
    const auto& p = l.poset();
    for (Id m = 0; m < l.size(); ++m) {
      const bool lm = is_left_modular(l, m).is_left_modular;
      if (lm != oracle::left_modular_by_definition(p, m)) return fail("pentagon test vs definition");
      if (l.size() > 1 && l.covers(m, l.top()) && coatom_criterion(l, m, l.bottom(), l.top()) != lm)
        return fail("coatom criterion");
    }
    if (!left_modular_maximal_is_modular_check(l)) return fail("maximal left-modular element not modular");
    if (auto c = find_sub_m_chain(l)) {
      const std::size_t n = c->elements.size() - 1;
      bool ok = true;
      for_each_maximal_chain(p, l.bottom(), l.top(), [&](const Chain& ch) {
        if (ch.size() - 1 > n) ok = false;
      });
      if (!ok) return fail("chain longer than a sub-M-chain");
    }
  }
  return {true, "1000 random lattices"};
}

Outcome known_values() {
  auto check = [](const Lattice& l, long long expect, const std::string& name) -> std::optional<std::string> {
    const long long brute = mobius_brute(l);
    const long long labels = mobius_from_labeling(comodernistic_labeling(l));
    if (brute != expect || labels != expect)
      return name + ": brute " + std::to_string(brute) + ", labeling " + std::to_string(labels);
    return std::nullopt;
  };
  if (auto e = check(partition_lattice(4).lattice, -6, "Pi4")) return fail(*e);
  if (auto e = check(k_equal_lattice(4, 3).lattice, 3, "Pi4,3")) return fail(*e);
  for (std::size_t n = 0; n <= 6; ++n)
    if (auto e = check(boolean_lattice(n), n % 2 ? -1 : 1, "B" + std::to_string(n))) return fail(*e);
  auto s3 = subgroup_lattice(make_group(*stock_group("D3"))).lattice;
  const long long mu = mobius_brute(s3);
  if (std::llabs(mu) != 3 || mobius_from_labeling(comodernistic_labeling(s3)) != mu) return fail("L(S3)");
  return {true, "mu(Pi4)=-6, mu(Pi4,3)=3, mu(Bn)=(-1)^n, |mu(L(S3))|=3"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"order congruence lattices of posets with at most 4 elements are comodernistic", order_congruence_comodernistic},
      {"comodernistic labelings are CL-labelings on the corpus", cl_labelings_valid},
      {"Moebius numbers from decreasing chains match brute force and Euler characteristic", mobius_agreement},
      {"decreasing chains of O(P) count linear extensions (Hasse-connected, |P| <= 5)", linear_extension_correspondence},
      {"Moebius recursion over compatible pairs (|P| <= 4)", mobius_recursion},
      {"lexicographic order of maximal chains is a shelling", lexicographic_shelling},
      {"G solvable iff L(G) comodernistic on the stock catalogue", group_equivalence},
      {"negative controls: polygons and a corrupted labeling", negative_controls},
      {"lemma suites on 1000 random lattices", lemma_suites},
      {"known Moebius values", known_values},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2zu %s (%s; %.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
    if (!o.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
