#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "comod/lattice.hpp"

namespace comod {

/// Outcome of the left-modular / modular tests for one element.
struct ModularityReport {
  Id element = 0;
  bool is_left_modular = false;
  bool is_modular = false;
  /// (a, c) with a < c, a∧m = c∧m and a∨m = c∨m; set iff not left-modular.
  std::optional<std::pair<Id, Id>> witness;
  /// (c, b) with m < c, m∧b = c∧b and m∨b = c∨b; set iff left-modular but
  /// not modular.
  std::optional<std::pair<Id, Id>> modular_witness;
};

/// Maximal chain with every element left-modular in the interval below its
/// successor (or, for an M-chain, in the whole lattice).
struct SubMChain {
  Chain elements;
};

// ---------------------------------------------------------------------------
// Element-level predicates. The `_in` variants work inside [lo, hi]; meets
// and joins of an interval agree with those of the lattice.

/// Pentagon witness for `m` failing left-modularity in [lo, hi].
inline std::optional<std::pair<Id, Id>> left_modular_witness(const Lattice& l, Id m, Id lo, Id hi) {
  Bitset iv = l.interval_set(lo, hi);
  std::optional<std::pair<Id, Id>> out;
  iv.for_each([&](std::size_t a) {
    if (out) return;
    Bitset above = l.up_set(static_cast<Id>(a)) & iv;
    above.for_each([&](std::size_t c) {
      if (out || c == a) return;
      if (l.meet(a, m) == l.meet(c, m) && l.join(a, m) == l.join(c, m))
        out = std::pair{static_cast<Id>(a), static_cast<Id>(c)};
    });
  });
  return out;
}

inline bool is_left_modular_in(const Lattice& l, Id m, Id lo, Id hi) {
  return !left_modular_witness(l, m, lo, hi).has_value();
}

/// Definitional check: (x∨m)∧y = x∨(m∧y) for all x < y.
inline bool is_left_modular_direct(const Lattice& l, Id m) {
  for (Id x = 0; x < l.size(); ++x) {
    bool ok = true;
    l.up_set(x).for_each([&](std::size_t y) {
      if (ok && l.meet(l.join(x, m), y) != l.join(x, l.meet(m, y))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

/// Pentagon in which `m` is the lower element of the long side.
inline std::optional<std::pair<Id, Id>> lower_long_side_witness(const Lattice& l, Id m, Id lo, Id hi) {
  Bitset iv = l.interval_set(lo, hi);
  std::optional<std::pair<Id, Id>> out;
  Bitset above = l.up_set(m) & iv;
  above.for_each([&](std::size_t c) {
    if (out || c == m) return;
    iv.for_each([&](std::size_t b) {
      if (out) return;
      if (l.meet(m, b) == l.meet(c, b) && l.join(m, b) == l.join(c, b))
        out = std::pair{static_cast<Id>(c), static_cast<Id>(b)};
    });
  });
  return out;
}

inline ModularityReport is_left_modular(const Lattice& l, Id m) {
  ModularityReport r;
  r.element = m;
  r.witness = left_modular_witness(l, m, l.bottom(), l.top());
  r.is_left_modular = !r.witness;
  if (r.is_left_modular) {
    r.modular_witness = lower_long_side_witness(l, m, l.bottom(), l.top());
    r.is_modular = !r.modular_witness;
  }
  return r;
}

/// Two-sided modular: left-modular and never the lower long-side element
/// of a pentagon.
inline bool is_modular_in(const Lattice& l, Id m, Id lo, Id hi) {
  return is_left_modular_in(l, m, lo, hi) && !lower_long_side_witness(l, m, lo, hi);
}

inline bool is_modular_element(const Lattice& l, Id m) { return is_modular_in(l, m, l.bottom(), l.top()); }

/// Coatom criterion inside [lo, hi]: m is left-modular iff m∧y ⋖ y for
/// every y in the interval with y ≰ m. `m` must be a coatom of [lo, hi].
inline bool coatom_criterion(const Lattice& l, Id m, Id lo, Id hi) {
  Bitset iv = l.interval_set(lo, hi);
  bool ok = true;
  iv.for_each([&](std::size_t y) {
    if (!ok || l.leq(static_cast<Id>(y), m)) return;
    if (!l.covers(l.meet(m, static_cast<Id>(y)), static_cast<Id>(y))) ok = false;
  });
  return ok;
}

/// Dual form for an atom `a` of [lo, hi]: z ⋖ a∨z for every z with a ≰ z.
inline bool atom_criterion(const Lattice& l, Id a, Id lo, Id hi) {
  Bitset iv = l.interval_set(lo, hi);
  bool ok = true;
  iv.for_each([&](std::size_t z) {
    if (!ok || l.leq(a, static_cast<Id>(z))) return;
    if (!l.covers(static_cast<Id>(z), l.join(a, static_cast<Id>(z)))) ok = false;
  });
  return ok;
}

inline bool is_left_modular_coatom(const Lattice& l, Id m) {
  if (l.size() < 2 || !l.covers(m, l.top())) throw NotACoatom(m);
  return coatom_criterion(l, m, l.bottom(), l.top());
}

/// Bitset of elements left-modular in the whole lattice.
inline Bitset left_modular_elements(const Lattice& l) {
  Bitset out(l.size());
  for (Id m = 0; m < l.size(); ++m)
    if (!left_modular_witness(l, m, l.bottom(), l.top())) out.set(m);
  return out;
}

// ---------------------------------------------------------------------------
// Lattice-level predicates.

/// Every atom of every interval is left-modular in that interval.
inline bool is_semimodular(const Lattice& l) {
  for (Id x = 0; x < l.size(); ++x)
    for (Id a : l.upper_covers(x)) {
      bool ok = true;
      l.up_set(a).for_each([&](std::size_t y) {
        if (ok && !atom_criterion(l, a, x, static_cast<Id>(y))) ok = false;
      });
      if (!ok) return false;
    }
  return true;
}

/// Textbook form: a∧b ⋖ a implies b ⋖ a∨b.
inline bool is_semimodular_classical(const Lattice& l) {
  for (Id a = 0; a < l.size(); ++a)
    for (Id b = 0; b < l.size(); ++b)
      if (l.covers(l.meet(a, b), a) && !l.covers(b, l.join(a, b))) return false;
  return true;
}

/// Every element is the join of the atoms below it.
inline bool is_atomic(const Lattice& l) {
  auto atoms = l.atoms();
  for (Id x = 0; x < l.size(); ++x) {
    Id j = l.bottom();
    for (Id a : atoms)
      if (l.leq(a, x)) j = l.join(j, a);
    if (j != x) return false;
  }
  return true;
}

inline bool is_geometric(const Lattice& l) { return is_semimodular(l) && is_atomic(l); }

inline bool is_modular_lattice(const Lattice& l) { return left_modular_elements(l).count() == l.size(); }

/// A maximal chain of elements left-modular in L, or nothing.
inline std::optional<SubMChain> find_m_chain(const Lattice& l) {
  Bitset lm = left_modular_elements(l);
  // reach[x]: top reachable from x through left-modular covers.
  std::vector<char> reach(l.size(), 0);
  const auto& order = l.poset().linear_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Id x = *it;
    if (!lm.test(x)) continue;
    if (x == l.top()) {
      reach[x] = 1;
      continue;
    }
    for (Id y : l.upper_covers(x))
      if (reach[y]) reach[x] = 1;
  }
  if (!reach[l.bottom()]) return std::nullopt;
  SubMChain c{{l.bottom()}};
  while (c.elements.back() != l.top())
    for (Id y : l.upper_covers(c.elements.back()))
      if (reach[y]) {
        c.elements.push_back(y);
        break;
      }
  return c;
}

inline bool is_supersolvable(const Lattice& l) { return is_graded(l.poset()) && find_m_chain(l).has_value(); }

/// Memoized search for left-modular coatoms of intervals.
///
/// Safe for concurrent use: verdicts are cached under a shared mutex.
class SubMChainFinder {
 public:
  explicit SubMChainFinder(const Lattice& l) : l_(&l) {}

  const Lattice& lattice() const { return *l_; }

  /// Smallest-id coatom of [lo, hi] left-modular in [lo, hi].
  std::optional<Id> left_modular_coatom(Id lo, Id hi) const {
    const std::uint64_t key = (std::uint64_t{lo} << 32) | hi;
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return decode(it->second);
    }
    std::int64_t v = -1;
    for (Id m : l_->lower_covers(hi))
      if (l_->leq(lo, m) && coatom_criterion(*l_, m, lo, hi)) {
        v = m;
        break;
      }
    std::unique_lock lock(mutex_);
    memo_.emplace(key, v);
    return decode(v);
  }

  /// Greedy top-down sub-M-chain of [lo, hi]; nothing if some stage has no
  /// left-modular coatom.
  std::optional<Chain> sub_m_chain(Id lo, Id hi) const {
    if (!l_->leq(lo, hi)) throw NotComparable(lo, hi);
    Chain down{hi};
    while (down.back() != lo) {
      auto m = left_modular_coatom(lo, down.back());
      if (!m) return std::nullopt;
      down.push_back(*m);
    }
    std::reverse(down.begin(), down.end());
    return down;
  }

  /// Sub-M-chain of [lo, hi] passing through the chain `through` (elements
  /// of [lo, hi] left-modular in [lo, hi], listed ascending). Gaps are filled
  /// greedily with coatoms above the next required element.
  std::optional<Chain> sub_m_chain_through(Id lo, Id hi, const Chain& through) const {
    Chain down{hi};
    std::size_t next = through.size();
    while (down.back() != lo) {
      Id cur = down.back();
      while (next > 0 && !l_->less(through[next - 1], cur)) --next;
      Id floor = next > 0 ? through[next - 1] : lo;
      std::optional<Id> pick;
      for (Id m : l_->lower_covers(cur))
        if (l_->leq(floor, m) && coatom_criterion(*l_, m, lo, cur)) {
          pick = m;
          break;
        }
      if (!pick) pick = left_modular_coatom(lo, cur);
      if (!pick) return std::nullopt;
      down.push_back(*pick);
    }
    std::reverse(down.begin(), down.end());
    return down;
  }

  /// First interval [x, y] (x < y, ascending) without a left-modular coatom.
  std::optional<std::pair<Id, Id>> comodernism_failure(unsigned jobs = 1) const {
    const Id n = static_cast<Id>(l_->size());
    std::vector<std::optional<std::pair<Id, Id>>> per_x(n);
    auto work = [&](Id start, Id stride) {
      for (Id x = start; x < n; x += stride) {
        l_->up_set(x).for_each([&](std::size_t y) {
          if (per_x[x] || y == x) return;
          if (!left_modular_coatom(x, static_cast<Id>(y))) per_x[x] = std::pair{x, static_cast<Id>(y)};
        });
      }
    };
    run_parallel(jobs, n, work);
    for (auto& f : per_x)
      if (f) return f;
    return std::nullopt;
  }

 private:
  static std::optional<Id> decode(std::int64_t v) {
    if (v < 0) return std::nullopt;
    return static_cast<Id>(v);
  }

  template <typename Work>
  static void run_parallel(unsigned jobs, Id n, Work& work) {
    jobs = std::max(1u, std::min<unsigned>(jobs, n));
    if (jobs == 1) {
      work(0, 1);
      return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back([&, t] { work(static_cast<Id>(t), static_cast<Id>(jobs)); });
    for (auto& th : pool) th.join();
  }

  const Lattice* l_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::int64_t> memo_;
};

inline std::optional<SubMChain> find_sub_m_chain(const Lattice& l) {
  SubMChainFinder f(l);
  auto c = f.sub_m_chain(l.bottom(), l.top());
  if (!c) return std::nullopt;
  return SubMChain{std::move(*c)};
}

/// Each element is left-modular in the interval [lo, successor].
inline bool is_sub_m_chain(const Lattice& l, const Chain& c, Id lo, Id hi) {
  if (!is_maximal_chain(l.poset(), c, lo, hi)) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!is_left_modular_in(l, c[i], lo, c[i + 1])) return false;
  return true;
}

inline bool is_m_chain(const Lattice& l, const Chain& c) {
  if (!is_maximal_chain(l.poset(), c, l.bottom(), l.top())) return false;
  return std::all_of(c.begin(), c.end(), [&](Id m) { return !left_modular_witness(l, m, l.bottom(), l.top()); });
}

inline bool is_comodernistic(const Lattice& l, unsigned jobs = 1) {
  return !SubMChainFinder(l).comodernism_failure(jobs).has_value();
}

/// Every interval [x, y] with x < y has an atom left-modular in it.
inline std::optional<std::pair<Id, Id>> modernism_failure(const Lattice& l) {
  for (Id x = 0; x < l.size(); ++x) {
    std::optional<std::pair<Id, Id>> fail;
    l.up_set(x).for_each([&](std::size_t y) {
      if (fail || y == x) return;
      bool found = false;
      for (Id a : l.upper_covers(x))
        if (l.leq(a, static_cast<Id>(y)) && atom_criterion(l, a, x, static_cast<Id>(y))) {
          found = true;
          break;
        }
      if (!found) fail = std::pair{x, static_cast<Id>(y)};
    });
    if (fail) return fail;
  }
  return std::nullopt;
}

inline bool is_modernistic(const Lattice& l) { return !modernism_failure(l).has_value(); }

/// Every left-modular coatom is modular.
inline bool left_modular_maximal_is_modular_check(const Lattice& l) {
  for (Id m : l.coatoms())
    if (is_left_modular_in(l, m, l.bottom(), l.top()) && lower_long_side_witness(l, m, l.bottom(), l.top()))
      return false;
  return true;
}

}  // namespace comod
