#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "comod/bitset.hpp"
#include "comod/families.hpp"
#include "comod/lattice.hpp"
#include "comod/modularity.hpp"

namespace comod {

/// A permutation of {0..d-1} as its image list.
using Permutation = std::vector<Id>;

/// Cycles in 1-based notation, e.g. {{1,2,3},{4,5}}.
using CycleNotation = std::vector<std::vector<int>>;

inline constexpr std::size_t kMaxGroupOrder = 360;

inline Permutation from_cycles(const CycleNotation& cycles, std::size_t degree = 0) {
  for (const auto& c : cycles)
    for (int v : c) {
      if (v < 1) throw BadPermutation("cycle entries must be positive");
      degree = std::max<std::size_t>(degree, static_cast<std::size_t>(v));
    }
  Permutation p(degree);
  std::iota(p.begin(), p.end(), Id{0});
  std::vector<bool> moved(degree, false);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      Id from = static_cast<Id>(c[i] - 1);
      if (moved[from]) throw BadPermutation("point " + std::to_string(c[i]) + " appears twice");
      moved[from] = true;
      p[from] = static_cast<Id>(c[(i + 1) % c.size()] - 1);
    }
  return p;
}

/// Finite group given by its Cayley table; element 0 need not be the identity.
class Group {
 public:
  Group() = default;

  /// Checks closure, identity, inverses and associativity.
  static Group from_table(const std::vector<std::vector<Id>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroup("nonempty", "empty table");
    if (n > kMaxGroupOrder) throw TooLarge("group order above " + std::to_string(kMaxGroupOrder));
    Group g;
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) throw NotAGroup("square table", "row " + std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) throw NotAGroup("closure", pair_name(a, b));
        g.table_[a * n + b] = table[a][b];
      }
    }
    g.finish(n);
    return g;
  }

  std::size_t order() const { return inverse_.size(); }
  Id identity() const { return identity_; }
  Id mul(Id a, Id b) const { return table_[a * order() + b]; }
  Id inv(Id a) const { return inverse_[a]; }
  Id conj(Id g, Id h) const { return mul(mul(g, h), inv(g)); }  // g h g⁻¹
  Id commutator(Id a, Id b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  /// Underlying permutations when built from generators.
  const std::vector<Permutation>& permutations() const { return perms_; }

  friend Group group_from_permutations(const std::vector<Permutation>&, std::size_t);

 private:
  static std::string pair_name(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
  }

  void finish(std::size_t n) {
    inverse_.assign(n, 0);
    std::optional<Id> e;
    for (Id a = 0; a < n && !e; ++a) {
      bool ok = true;
      for (Id b = 0; b < n && ok; ++b) ok = table_[a * n + b] == b && table_[b * n + a] == b;
      if (ok) e = a;
    }
    if (!e) throw NotAGroup("identity", "no two-sided identity");
    identity_ = *e;
    for (Id a = 0; a < n; ++a) {
      std::optional<Id> found;
      for (Id b = 0; b < n && !found; ++b)
        if (table_[a * n + b] == identity_ && table_[b * n + a] == identity_) found = b;
      if (!found) throw NotAGroup("inverses", "element " + std::to_string(a));
      inverse_[a] = *found;
    }
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) {
        const Id ab = table_[a * n + b];
        for (Id c = 0; c < n; ++c)
          if (table_[ab * n + c] != table_[a * n + table_[b * n + c]])
            throw NotAGroup("associativity", "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                                 std::to_string(c) + ")");
      }
  }

  std::vector<Id> table_;
  std::vector<Id> inverse_;
  Id identity_ = 0;
  std::vector<Permutation> perms_;
};

/// Closure of the generators under composition (apply left factor first).
/// Element 0 is the identity; the rest appear in breadth-first order.
inline Group group_from_permutations(const std::vector<Permutation>& gens, std::size_t max_order = kMaxGroupOrder) {
  std::size_t degree = 1;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  std::vector<Permutation> padded;
  for (const auto& g : gens) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), Id{0});
    std::vector<bool> hit(degree, false);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] >= g.size() || hit[g[i]]) throw BadPermutation("generator is not a permutation");
      hit[g[i]] = true;
      p[i] = g[i];
    }
    padded.push_back(std::move(p));
  }
  auto compose = [&](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = b[a[i]];
    return c;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), Id{0});
  std::vector<Permutation> elems{id};
  std::map<Permutation, Id> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : padded) {
      Permutation c = compose(elems[i], g);
      if (index.count(c)) continue;
      if (elems.size() >= max_order) throw TooLarge("group order exceeds " + std::to_string(max_order));
      index.emplace(c, static_cast<Id>(elems.size()));
      elems.push_back(std::move(c));
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<Id>> table(n, std::vector<Id>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  Group g = Group::from_table(table);
  g.perms_ = std::move(elems);
  return g;
}

inline Group group_from_cycles(const std::vector<CycleNotation>& gens, std::size_t max_order = kMaxGroupOrder) {
  std::vector<Permutation> perms;
  for (const auto& c : gens) perms.push_back(from_cycles(c));
  return group_from_permutations(perms, max_order);
}

// ---------------------------------------------------------------------------
// Subgroups.

struct Subgroup {
  Bitset members;

  std::size_t order() const { return members.count(); }
  std::vector<Id> elements() const {
    std::vector<Id> out;
    members.for_each([&](std::size_t x) { out.push_back(static_cast<Id>(x)); });
    return out;
  }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

inline bool is_subgroup(const Group& g, const Bitset& s) {
  if (!s.test(g.identity())) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    if (!ok) return;
    if (!s.test(g.inv(static_cast<Id>(a)))) ok = false;
    s.for_each([&](std::size_t b) {
      if (ok && !s.test(g.mul(static_cast<Id>(a), static_cast<Id>(b)))) ok = false;
    });
  });
  return ok;
}

/// ⟨gens⟩.
inline Subgroup generated(const Group& g, const std::vector<Id>& gens) {
  Bitset in(g.order());
  std::vector<Id> queue{g.identity()};
  in.set(g.identity());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Id s : gens) {
      Id c = g.mul(queue[i], s);
      if (!in.test(c)) {
        in.set(c);
        queue.push_back(c);
      }
    }
  return {std::move(in)};
}

inline Subgroup whole_group(const Group& g) {
  Bitset all(g.order());
  all.set_all();
  return {all};
}

inline Subgroup trivial_subgroup(const Group& g) {
  Bitset one(g.order());
  one.set(g.identity());
  return {one};
}

/// Subgroups of g, by order and then by lexicographically least member set.
inline std::vector<Subgroup> all_subgroups(const Group& g) {
  struct Found {
    Bitset members;
    std::vector<Id> gens;
  };
  std::vector<Found> found{{trivial_subgroup(g).members, {}}};
  std::unordered_set<Bitset, BitsetHash> seen{found[0].members};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Id x = 0; x < g.order(); ++x) {
      if (found[i].members.test(x)) continue;
      std::vector<Id> gens = found[i].gens;
      gens.push_back(x);
      Subgroup h = generated(g, gens);
      if (seen.insert(h.members).second) found.push_back({std::move(h.members), std::move(gens)});
    }
  }
  std::vector<Subgroup> out;
  for (auto& f : found) out.push_back({std::move(f.members)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    auto ca = a.order(), cb = b.order();
    if (ca != cb) return ca < cb;
    return lex_less(a.members, b.members);
  });
  return out;
}

using SubgroupLattice = Family<Subgroup>;

inline std::string subgroup_label(const Group& g, const Subgroup& h) {
  if (h.order() == 1) return "1";
  if (h.order() == g.order()) return "G";
  std::string s = "{";
  for (Id x : h.elements()) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + "}";
}

/// L(G): subgroups ordered by inclusion.
inline SubgroupLattice subgroup_lattice(const Group& g, std::size_t max_order = 120) {
  if (g.order() > max_order)
    throw TooLarge("subgroup lattice limited to groups of order " + std::to_string(max_order));
  auto subs = all_subgroups(g);
  std::vector<std::string> labels;
  for (const auto& h : subs) labels.push_back(subgroup_label(g, h));
  Poset p = Poset::from_leq(
      subs.size(), [&](Id a, Id b) { return subs[a].members.is_subset_of(subs[b].members); }, std::move(labels));
  return {as_lattice(std::move(p)), std::move(subs)};
}

/// Lattice id of a subgroup, if present.
inline std::optional<Id> find_subgroup(const SubgroupLattice& lg, const Bitset& members) {
  for (Id i = 0; i < lg.decode.size(); ++i)
    if (lg.decode[i].members == members) return i;
  return std::nullopt;
}

inline bool is_normal(const Group& g, const Bitset& h) {
  if (!is_subgroup(g, h)) throw NotASubgroup();
  bool ok = true;
  h.for_each([&](std::size_t x) {
    for (Id a = 0; a < g.order() && ok; ++a)
      if (!h.test(g.conj(a, static_cast<Id>(x)))) ok = false;
  });
  return ok;
}

inline bool is_normal(const Group& g, const Subgroup& h) { return is_normal(g, h.members); }

/// [H, H].
inline Subgroup derived_subgroup(const Group& g, const Subgroup& h) {
  std::vector<Id> comms;
  Bitset seen(g.order());
  h.members.for_each([&](std::size_t a) {
    h.members.for_each([&](std::size_t b) {
      Id c = g.commutator(static_cast<Id>(a), static_cast<Id>(b));
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    });
  });
  return generated(g, comms);
}

inline std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> series{whole_group(g)};
  for (;;) {
    Subgroup next = derived_subgroup(g, series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

inline bool is_solvable(const Group& g) { return derived_series(g).back().order() == 1; }

/// Smallest normal subgroup containing the given elements.
inline Subgroup normal_closure(const Group& g, const Bitset& s) {
  std::vector<Id> gens;
  s.for_each([&](std::size_t x) {
    for (Id a = 0; a < g.order(); ++a) gens.push_back(g.conj(a, static_cast<Id>(x)));
  });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated(g, gens);
}

/// All normal subgroups, as joins of normal closures of single elements.
inline std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Bitset> closures;
  for (Id x = 0; x < g.order(); ++x) {
    Bitset one(g.order());
    one.set(x);
    closures.push_back(normal_closure(g, one).members);
  }
  std::vector<Subgroup> out{trivial_subgroup(g)};
  std::unordered_set<Bitset, BitsetHash> seen{out[0].members};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& c : closures) {
      if (c.is_subset_of(out[i].members)) continue;
      Bitset u = out[i].members | c;
      std::vector<Id> gens;
      u.for_each([&](std::size_t x) { gens.push_back(static_cast<Id>(x)); });
      Subgroup j = generated(g, gens);
      if (seen.insert(j.members).second) out.push_back(std::move(j));
    }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return lex_less(a.members, b.members);
  });
  return out;
}

/// A maximal chain of normal subgroups 1 = N_0 < ... < N_k = G. Each step
/// takes the minimal normal subgroup above the previous one with the
/// lexicographically least member set.
inline std::vector<Subgroup> chief_series(const Group& g) {
  auto normals = normal_subgroups(g);
  std::vector<Subgroup> series{normals.front()};
  while (series.back().order() != g.order()) {
    const Bitset& cur = series.back().members;
    std::vector<const Subgroup*> above;
    for (const auto& n : normals)
      if (n.order() > cur.count() && cur.is_subset_of(n.members)) above.push_back(&n);
    const Subgroup* best = nullptr;
    for (const Subgroup* m : above) {
      bool minimal = std::none_of(above.begin(), above.end(), [&](const Subgroup* o) {
        return o != m && o->members.is_subset_of(m->members);
      });
      if (minimal && (!best || lex_less(m->members, best->members))) best = m;
    }
    series.push_back(*best);
  }
  return series;
}

/// Lattice ids of the chief series, bottom first.
inline Chain chief_series_ids(const Group& g, const SubgroupLattice& lg) {
  Chain out;
  for (const auto& n : chief_series(g)) out.push_back(*find_subgroup(lg, n.members));
  return out;
}

/// Elements hk for h in H, k in K.
inline Bitset product_set(const Group& g, const Bitset& h, const Bitset& k) {
  Bitset out(g.order());
  h.for_each([&](std::size_t a) {
    k.for_each([&](std::size_t b) { out.set(g.mul(static_cast<Id>(a), static_cast<Id>(b))); });
  });
  return out;
}

inline bool permutes(const Group& g, const Bitset& h, const Bitset& k) {
  return product_set(g, h, k) == product_set(g, k, h);
}

/// H(K ∩ L) = K ∩ HL whenever H ⊆ K, over all triples of subgroups; and
/// HK is the join whenever H and K permute.
inline bool dedekind_identity_check(const Group& g, const SubgroupLattice& lg) {
  const auto& subs = lg.decode;
  const std::size_t n = subs.size();
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const Bitset& h = subs[a].members;
      const Bitset& k = subs[b].members;
      if (permutes(g, h, k) && product_set(g, h, k) != subs[lg.lattice.join(a, b)].members) return false;
      if (!h.is_subset_of(k)) continue;
      for (Id c = 0; c < n; ++c) {
        const Bitset& l = subs[c].members;
        if (product_set(g, h, k & l) != (k & product_set(g, h, l))) return false;
      }
    }
  return true;
}

/// Maximal chains 1 = H_k < ... < H_0 = G where each H_j complements N_j
/// of the chief series, returned bottom first as lattice ids.
inline std::vector<Chain> complement_chains_to_chief_series(const Group& g, const SubgroupLattice& lg) {
  if (!is_solvable(g)) throw NotSolvable();
  const Lattice& l = lg.lattice;
  Chain series = chief_series_ids(g, lg);
  const std::size_t k = series.size() - 1;
  std::vector<Chain> out;
  Chain down{l.top()};
  auto dfs = [&](auto&& self, std::size_t j) -> void {
    if (j > k) {
      out.emplace_back(down.rbegin(), down.rend());
      return;
    }
    const Id n = series[j];
    const std::size_t want = g.order() / lg.decode[n].order();
    l.down_set(down.back()).for_each([&](std::size_t hx) {
      const Id h = static_cast<Id>(hx);
      if (lg.decode[h].order() != want || l.meet(h, n) != l.bottom() || l.join(h, n) != l.top()) return;
      down.push_back(h);
      self(self, j + 1);
      down.pop_back();
    });
  };
  dfs(dfs, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// For every subgroup H < G: with l the largest index such that H N_l < G,
/// the subgroup K = H N_l is a coatom of [H, G] and permutes with every
/// subgroup between H and G.
inline bool chief_lift_permutes_check(const Group& g, const SubgroupLattice& lg) {
  if (!is_solvable(g)) throw NotSolvable();
  const Lattice& l = lg.lattice;
  Chain series = chief_series_ids(g, lg);
  for (Id h = 0; h < l.size(); ++h) {
    if (h == l.top()) continue;
    Id kk = h;
    for (Id n : series) {
      Id j = l.join(h, n);
      if (j != l.top()) kk = j;
    }
    if (!l.covers(kk, l.top())) return false;
    bool ok = true;
    l.up_set(h).for_each([&](std::size_t x) {
      if (ok && !permutes(g, lg.decode[kk].members, lg.decode[x].members)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

/// Iwasawa-style test: a chain of subgroups normal in G with prime steps.
inline bool is_supersolvable_group(const Group& g) {
  auto normals = normal_subgroups(g);
  auto is_prime = [](std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  };
  // reach[i]: some chain with prime steps runs from N_i up to G.
  std::vector<bool> reach(normals.size(), false);
  for (std::size_t i = normals.size(); i-- > 0;) {
    if (normals[i].order() == g.order()) {
      reach[i] = true;
      continue;
    }
    for (std::size_t j = i + 1; j < normals.size() && !reach[i]; ++j)
      if (reach[j] && normals[i].members.is_subset_of(normals[j].members) &&
          normals[j].order() % normals[i].order() == 0 && is_prime(normals[j].order() / normals[i].order()))
        reach[i] = true;
  }
  return reach[0];
}

inline bool solvable_iff_comodernistic_check(const Group& g, unsigned jobs = 1) {
  auto lg = subgroup_lattice(g);
  return is_solvable(g) == is_comodernistic(lg.lattice, jobs);
}

/// A maximal chain whose every element is modular in the interval below
/// its successor.
inline bool schmidt_condition3(const Lattice& l) {
  std::vector<char> good(l.size(), 0);
  good[l.bottom()] = 1;
  for (Id x : l.poset().linear_order()) {
    if (x == l.bottom()) continue;
    for (Id c : l.lower_covers(x))
      if (good[c] && is_modular_in(l, c, l.bottom(), x)) {
        good[x] = 1;
        break;
      }
  }
  return good[l.top()];
}

// ---------------------------------------------------------------------------
// Stock catalogue.

struct StockGroup {
  std::string name;
  std::size_t order;
  std::vector<CycleNotation> generators;
};

inline CycleNotation cycle_of(int from, int to) {
  std::vector<int> c;
  for (int i = from; i <= to; ++i) c.push_back(i);
  return {c};
}

inline std::vector<StockGroup> stock_groups() {
  std::vector<StockGroup> out;
  for (int n = 2; n <= 12; ++n) out.push_back({"Z" + std::to_string(n), std::size_t(n), {cycle_of(1, n)}});
  for (int n = 3; n <= 8; ++n) {
    CycleNotation flip;
    for (int i = 1, j = n; i < j; ++i, --j) flip.push_back({i, j});
    out.push_back({"D" + std::to_string(n), std::size_t(2 * n), {cycle_of(1, n), flip}});
  }
  out.push_back({"Z2^2", 4, {{{1, 2}}, {{3, 4}}}});
  out.push_back({"Z2^3", 8, {{{1, 2}}, {{3, 4}}, {{5, 6}}}});
  out.push_back({"Z3^2", 9, {{{1, 2, 3}}, {{4, 5, 6}}}});
  out.push_back({"Z2xZ4", 8, {{{1, 2}}, {{3, 4, 5, 6}}}});
  out.push_back({"Z2xZ6", 12, {{{1, 2}}, {{3, 4, 5, 6, 7, 8}}}});
  out.push_back({"Q8", 8, {{{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 5, 3, 7}, {2, 8, 4, 6}}}});
  out.push_back({"Dic3",
                 12,
                 {{{1, 2, 3, 4, 5, 6}, {12, 11, 10, 9, 8, 7}}, {{1, 7, 4, 10}, {2, 8, 5, 11}, {3, 9, 6, 12}}}});
  out.push_back({"A4", 12, {{{1, 2, 3}}, {{1, 2}, {3, 4}}}});
  out.push_back({"S4", 24, {{{1, 2, 3, 4}}, {{1, 2}}}});
  out.push_back({"Z2xA4", 24, {{{1, 2, 3}}, {{1, 2}, {3, 4}}, {{5, 6}}}});
  out.push_back({"S3xZ3", 18, {{{1, 2, 3}}, {{1, 2}}, {{4, 5, 6}}}});
  out.push_back({"A5", 60, {{{1, 2, 3, 4, 5}}, {{1, 2, 3}}}});
  return out;
}

inline std::optional<StockGroup> stock_group(const std::string& name) {
  for (auto& s : stock_groups())
    if (s.name == name) return s;
  return std::nullopt;
}

inline Group make_group(const StockGroup& s) { return group_from_cycles(s.generators); }

}  // namespace comod
