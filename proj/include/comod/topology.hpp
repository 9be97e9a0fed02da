#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "comod/cl_labeling.hpp"
#include "comod/lattice.hpp"
#include "comod/poset.hpp"

namespace comod {

/// Simplicial complex stored by its facets. Vertices are element ids of
/// the poset it came from.
struct SimplicialComplex {
  std::vector<Id> vertices;
  std::vector<std::vector<Id>> facets;  // sorted, lexicographically ordered

  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& f : facets) d = std::max(d, f.size());
    return d == 0 ? 0 : d - 1;
  }
};

/// Order complex of the proper part of a bounded poset. 0̂ ⋖ 1̂ gives the
/// complex whose only face is the empty one.
inline SimplicialComplex order_complex(const Poset& p) {
  auto b = p.bottom(), t = p.top();
  if (!b || !t) throw NotBounded();
  if (*b == *t) throw DegenerateBoundedPair();
  SimplicialComplex k;
  for (Id x = 0; x < p.size(); ++x)
    if (x != *b && x != *t) k.vertices.push_back(x);
  for_each_maximal_chain(p, *b, *t, [&](const Chain& c) {
    std::vector<Id> f(c.begin() + 1, c.end() - 1);
    std::sort(f.begin(), f.end());
    k.facets.push_back(std::move(f));
  });
  std::sort(k.facets.begin(), k.facets.end());
  return k;
}

/// Classical recursion μ(x,x) = 1, μ(x,z) = −Σ_{x≤w<z} μ(x,w).
inline long long mobius_brute(const Poset& p, Id x, Id y) {
  if (!p.leq(x, y)) throw NotComparable(x, y);
  std::vector<long long> mu(p.size(), 0);
  Bitset iv = p.up_set(x) & p.down_set(y);
  for (Id z : p.linear_order()) {
    if (!iv.test(z)) continue;
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    long long s = 0;
    (p.down_set(z) & iv).for_each([&](std::size_t w) {
      if (w != z) s += mu[w];
    });
    mu[z] = -s;
  }
  return mu[y];
}

inline long long mobius_brute(const Lattice& l) { return mobius_brute(l.poset(), l.bottom(), l.top()); }

enum class EulerMethod { Auto, Explicit, InclusionExclusion };

namespace detail {

inline long long euler_explicit(const SimplicialComplex& k) {
  std::set<std::vector<Id>> faces;
  for (const auto& f : k.facets) {
    const std::size_t m = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<Id> face;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) face.push_back(f[i]);
      faces.insert(std::move(face));
    }
  }
  long long chi = -1;  // empty face
  for (const auto& f : faces) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

// χ(K) = Σ_{T ≠ ∅, ∩T ≠ ∅} (−1)^{|T|+1}; branches die once the
// intersection is empty.
inline long long euler_inclusion_exclusion(const SimplicialComplex& k) {
  const auto& fs = k.facets;
  long long chi = 0;
  struct Frame {
    std::size_t next;
    std::vector<Id> meet;
    int size;
  };
  std::vector<Frame> stack;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!fs[i].empty()) stack.push_back({i + 1, fs[i], 1});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    chi += (fr.size % 2 == 1) ? 1 : -1;
    for (std::size_t j = fr.next; j < fs.size(); ++j) {
      std::vector<Id> m;
      std::set_intersection(fr.meet.begin(), fr.meet.end(), fs[j].begin(), fs[j].end(), std::back_inserter(m));
      if (!m.empty()) stack.push_back({j + 1, std::move(m), fr.size + 1});
    }
  }
  return chi - 1;
}

}  // namespace detail

/// Reduced Euler characteristic Σ_{d ≥ −1} (−1)^d f_d.
inline long long euler_characteristic(const SimplicialComplex& k, EulerMethod method = EulerMethod::Auto) {
  if (method == EulerMethod::Auto) {
    double faces = 0;
    for (const auto& f : k.facets) faces += std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(f.size(), 60)));
    method = faces <= 1e6 ? EulerMethod::Explicit : EulerMethod::InclusionExclusion;
  }
  return method == EulerMethod::Explicit ? detail::euler_explicit(k) : detail::euler_inclusion_exclusion(k);
}

struct ShellingReport {
  bool ok = true;
  std::size_t position = 0;  // index into `order` of the first bad facet
  std::size_t earlier = 0;   // an earlier position whose intersection is not covered
  explicit operator bool() const { return ok; }
};

/// Nonpure shelling test: for every j ≥ 2, F_j ∩ (F_1 ∪ … ∪ F_{j−1}) is
/// pure of dimension dim F_j − 1.
inline ShellingReport is_shelling(const SimplicialComplex& k, const std::vector<std::size_t>& order) {
  const std::size_t m = k.facets.size();
  if (order.size() != m) throw BadPermutation("order has wrong length");
  {
    std::vector<bool> hit(m, false);
    for (auto i : order) {
      if (i >= m || hit[i]) throw BadPermutation("order is not a permutation of the facets");
      hit[i] = true;
    }
  }
  Id max_vertex = 0;
  for (const auto& f : k.facets)
    for (Id v : f) max_vertex = std::max(max_vertex, v);
  std::vector<Bitset> sets(m, Bitset(max_vertex + 1));
  for (std::size_t i = 0; i < m; ++i)
    for (Id v : k.facets[i]) sets[i].set(v);

  std::vector<Bitset> inter;
  for (std::size_t j = 1; j < m; ++j) {
    const Bitset& fj = sets[order[j]];
    const std::size_t dj = fj.count();
    Bitset ridge_gaps(max_vertex + 1);  // v with F_j \ {v} inside an earlier facet
    inter.clear();
    for (std::size_t i = 0; i < j; ++i) {
      Bitset s = fj & sets[order[i]];
      if (dj > 0 && s.count() == dj - 1) ridge_gaps |= fj - s;
      inter.push_back(std::move(s));
    }
    if (dj == 0) return {false, j, 0};
    for (std::size_t i = 0; i < j; ++i)
      if (ridge_gaps.is_subset_of(inter[i])) return {false, j, i};
  }
  return {};
}

/// Lexicographic order of the maximal chains by their words, as facets.
inline ShellingReport verify_lex_shelling(const Labeling& lab, std::size_t max_chains = 10000) {
  const Lattice& l = lab.lattice();
  auto chains = labeled_chains(lab, max_chains);
  std::stable_sort(chains.begin(), chains.end(),
                   [](const LabeledChain& a, const LabeledChain& b) { return a.word < b.word; });
  SimplicialComplex k = order_complex(l.poset());
  std::map<std::vector<Id>, std::size_t> index;
  for (std::size_t i = 0; i < k.facets.size(); ++i) index[k.facets[i]] = i;
  std::vector<std::size_t> order;
  for (const auto& c : chains) {
    std::vector<Id> f(c.chain.begin() + 1, c.chain.end() - 1);
    std::sort(f.begin(), f.end());
    order.push_back(index.at(f));
  }
  return is_shelling(k, order);
}

/// Decreasing chains tallied by sphere dimension (chain length − 2).
inline std::map<int, std::size_t> homotopy_summary(const Labeling& lab) {
  std::map<int, std::size_t> out;
  for (const auto& c : decreasing_chains(lab)) ++out[static_cast<int>(c.word.size()) - 2];
  return out;
}

}  // namespace comod
