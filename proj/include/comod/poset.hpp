#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "comod/bitset.hpp"
#include "comod/error.hpp"

namespace comod {

/// Strictly increasing sequence of element ids (in the order of the poset).
using Chain = std::vector<Id>;
/// Cover relation x ⋖ y stored as (x, y).
using Cover = std::pair<Id, Id>;

/// Finite poset on {0, ..., n-1}.
///
/// The order relation is stored as bitset rows of up-sets and down-sets,
/// together with its transitive reduction (the covers). Instances are
/// immutable after construction.
class Poset {
 public:
  Poset() = default;

  /// Closure of `covers`; the stored covers are re-reduced, so redundant
  /// relations in the input are dropped.
  static Poset from_covers(std::size_t n, std::span<const Cover> covers, std::vector<std::string> labels = {}) {
    if (n == 0) throw BadParams("a poset needs at least one element");
    std::vector<std::vector<Id>> succ(n);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [x, y] : covers) {
      if (x >= n) throw BadId(x);
      if (y >= n) throw BadId(y);
      if (x == y) throw CycleDetected();
      succ[x].push_back(y);
      ++indeg[y];
    }
    // Kahn's algorithm; ascending ids among the ready elements.
    std::vector<Id> order;
    order.reserve(n);
    std::vector<Id> ready;
    for (Id v = 0; v < n; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
      std::pop_heap(ready.begin(), ready.end(), std::greater<>{});
      Id v = ready.back();
      ready.pop_back();
      order.push_back(v);
      for (Id w : succ[v])
        if (--indeg[w] == 0) {
          ready.push_back(w);
          std::push_heap(ready.begin(), ready.end(), std::greater<>{});
        }
    }
    if (order.size() != n) throw CycleDetected();

    std::vector<Bitset> up(n, Bitset(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      up[*it].set(*it);
      for (Id w : succ[*it]) up[*it] |= up[w];
    }
    return Poset(std::move(up), std::move(labels));
  }

  static Poset from_covers(std::size_t n, std::initializer_list<Cover> covers, std::vector<std::string> labels = {}) {
    return from_covers(n, std::span<const Cover>(covers.begin(), covers.size()), std::move(labels));
  }

  /// Poset from up-set rows (`up[x]` = {y : x <= y}); the rows are validated.
  static Poset from_up_sets(std::vector<Bitset> up, std::vector<std::string> labels = {}) {
    const std::size_t n = up.size();
    if (n == 0) throw BadParams("a poset needs at least one element");
    for (Id x = 0; x < n; ++x) {
      if (up[x].size() != n) throw BadParams("relation row has wrong width");
      if (!up[x].test(x)) throw NotAPartialOrder("relation is not reflexive at " + std::to_string(x));
    }
    for (Id x = 0; x < n; ++x) {
      bool ok = true;
      up[x].for_each([&](std::size_t y) {
        if (!ok) return;
        if (y != x && up[y].test(x)) ok = false;
        else if (!up[y].is_subset_of(up[x])) ok = false;
      });
      if (!ok) throw NotAPartialOrder("relation is not antisymmetric or not transitive at " + std::to_string(x));
    }
    return Poset(std::move(up), std::move(labels));
  }

  /// Poset whose order is given by a predicate `leq(x, y)`.
  template <typename Leq>
  static Poset from_leq(std::size_t n, Leq&& leq, std::vector<std::string> labels = {}) {
    std::vector<Bitset> up(n, Bitset(n));
    for (Id x = 0; x < n; ++x)
      for (Id y = 0; y < n; ++y)
        if (x == y || leq(x, y)) up[x].set(y);
    return from_up_sets(std::move(up), std::move(labels));
  }

  std::size_t size() const { return up_.size(); }

  bool leq(Id x, Id y) const { return up_[x].test(y); }
  bool less(Id x, Id y) const { return x != y && up_[x].test(y); }
  bool comparable(Id x, Id y) const { return leq(x, y) || leq(y, x); }
  bool covers(Id x, Id y) const {
    const auto& c = upper_[x];
    return std::binary_search(c.begin(), c.end(), y);
  }

  const Bitset& up_set(Id x) const { return up_[x]; }
  const Bitset& down_set(Id x) const { return down_[x]; }
  const std::vector<Id>& upper_covers(Id x) const { return upper_[x]; }
  const std::vector<Id>& lower_covers(Id x) const { return lower_[x]; }

  /// All cover relations, sorted.
  std::vector<Cover> cover_relations() const {
    std::vector<Cover> out;
    for (Id x = 0; x < size(); ++x)
      for (Id y : upper_[x]) out.emplace_back(x, y);
    return out;
  }

  /// Linear extension: ascending down-set size, ties by id.
  const std::vector<Id>& linear_order() const { return order_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Id x) const { return x < labels_.size() ? labels_[x] : std::to_string(x); }

  std::vector<Id> minimal_elements() const {
    std::vector<Id> out;
    for (Id x = 0; x < size(); ++x)
      if (lower_[x].empty()) out.push_back(x);
    return out;
  }
  std::vector<Id> maximal_elements() const {
    std::vector<Id> out;
    for (Id x = 0; x < size(); ++x)
      if (upper_[x].empty()) out.push_back(x);
    return out;
  }

  std::optional<Id> bottom() const {
    auto m = minimal_elements();
    if (m.size() == 1) return m.front();
    return std::nullopt;
  }
  std::optional<Id> top() const {
    auto m = maximal_elements();
    if (m.size() == 1) return m.front();
    return std::nullopt;
  }
  bool is_bounded() const { return bottom().has_value() && top().has_value(); }

  /// Same ground set and same order (labels are ignored).
  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

  /// Order dual: up-sets and down-sets swap.
  friend Poset dual(const Poset& p) {
    std::vector<Bitset> up = p.down_;
    return Poset(std::move(up), p.labels_);
  }

  /// Induced subposet on `elements` (kept in the given order).
  Poset induced(std::span<const Id> elements) const {
    const std::size_t k = elements.size();
    std::vector<Bitset> up(k, Bitset(k));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j)
        if (leq(elements[i], elements[j])) up[i].set(j);
      if (!labels_.empty()) labels.push_back(label(elements[i]));
    }
    return Poset(std::move(up), std::move(labels));
  }

 private:
  Poset(std::vector<Bitset> up, std::vector<std::string> labels) : up_(std::move(up)), labels_(std::move(labels)) {
    const std::size_t n = up_.size();
    down_.assign(n, Bitset(n));
    for (Id x = 0; x < n; ++x) up_[x].for_each([&](std::size_t y) { down_[y].set(x); });

    upper_.assign(n, {});
    lower_.assign(n, {});
    for (Id x = 0; x < n; ++x) {
      Bitset strict = up_[x];
      strict.reset(x);
      Bitset above_strict(n);
      strict.for_each([&](std::size_t z) {
        Bitset s = up_[z];
        s.reset(z);
        above_strict |= s;
      });
      strict -= above_strict;
      strict.for_each([&](std::size_t y) {
        upper_[x].push_back(static_cast<Id>(y));
        lower_[y].push_back(x);
      });
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Id{0});
    std::vector<std::size_t> depth(n);
    for (Id x = 0; x < n; ++x) depth[x] = down_[x].count();
    std::stable_sort(order_.begin(), order_.end(), [&](Id a, Id b) { return depth[a] < depth[b]; });
  }

  std::vector<Bitset> up_, down_;
  std::vector<std::vector<Id>> upper_, lower_;
  std::vector<Id> order_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Small constructors.

inline Poset chain_poset(std::size_t n) {
  std::vector<Cover> c;
  for (Id i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return Poset::from_covers(n, c);
}

inline Poset antichain_poset(std::size_t n) { return Poset::from_covers(n, std::span<const Cover>{}); }

// ---------------------------------------------------------------------------
// Structure queries.

inline bool is_hasse_connected(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<bool> seen(n, false);
  std::vector<Id> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Id v = stack.back();
    stack.pop_back();
    auto visit = [&](Id w) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    };
    for (Id w : p.upper_covers(v)) visit(w);
    for (Id w : p.lower_covers(v)) visit(w);
  }
  return reached == n;
}

/// Length of the longest chain from the bottom to each element.
inline std::vector<int> element_heights(const Poset& p) {
  if (!p.is_bounded()) throw NotBounded();
  std::vector<int> h(p.size(), 0);
  for (Id x : p.linear_order())
    for (Id y : p.lower_covers(x)) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

inline int height(const Poset& p) { return element_heights(p)[*p.top()]; }

inline bool is_graded(const Poset& p) {
  if (!p.is_bounded()) throw NotBounded();
  const std::size_t n = p.size();
  std::vector<int> lo(n, 0), hi(n, 0);
  bool first = true;
  for (Id x : p.linear_order()) {
    if (first) {
      first = false;
      continue;
    }
    lo[x] = std::numeric_limits<int>::max();
    for (Id y : p.lower_covers(x)) {
      lo[x] = std::min(lo[x], lo[y] + 1);
      hi[x] = std::max(hi[x], hi[y] + 1);
    }
  }
  Id t = *p.top();
  return lo[t] == hi[t];
}

struct Structure {
  bool bounded = false;
  std::optional<bool> graded;  // only for bounded posets
  std::optional<int> height;   // only for bounded posets
  std::vector<int> heights;    // empty unless bounded
  std::vector<Id> atoms;
  std::vector<Id> coatoms;
  bool hasse_connected = false;
};

inline Structure structure(const Poset& p) {
  Structure s;
  s.bounded = p.is_bounded();
  s.hasse_connected = is_hasse_connected(p);
  if (s.bounded) {
    s.graded = is_graded(p);
    s.heights = element_heights(p);
    s.height = s.heights[*p.top()];
    if (p.size() > 1) {
      s.atoms = p.upper_covers(*p.bottom());
      s.coatoms = p.lower_covers(*p.top());
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Maximal chains.

/// Calls `f(chain)` for every maximal chain of [x, y], in lexicographic
/// order of the id sequences. Returning false from `f` stops the walk.
template <typename F>
void for_each_maximal_chain(const Poset& p, Id x, Id y, F&& f) {
  if (!p.leq(x, y)) throw NotComparable(x, y);
  Chain chain{x};
  std::vector<std::size_t> next{0};
  while (!chain.empty()) {
    Id cur = chain.back();
    if (cur == y) {
      if constexpr (std::is_same_v<std::invoke_result_t<F, const Chain&>, bool>) {
        if (!f(static_cast<const Chain&>(chain))) return;
      } else {
        f(static_cast<const Chain&>(chain));
      }
      chain.pop_back();
      next.pop_back();
      continue;
    }
    const auto& ups = p.upper_covers(cur);
    std::size_t& k = next.back();
    while (k < ups.size() && !p.leq(ups[k], y)) ++k;
    if (k == ups.size()) {
      chain.pop_back();
      next.pop_back();
      continue;
    }
    Id w = ups[k++];
    chain.push_back(w);
    next.push_back(0);
  }
}

/// Maximal chains of [x, y] as an input range.
class MaximalChains {
 public:
  MaximalChains(const Poset& p, Id x, Id y) : p_(&p), x_(x), y_(y) {
    if (!p.leq(x, y)) throw NotComparable(x, y);
  }

  class iterator {
   public:
    using value_type = Chain;
    using difference_type = std::ptrdiff_t;
    using reference = const Chain&;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const Poset* p, Id x, Id y) : p_(p), y_(y), chain_{x}, next_{0} { advance(); }

    reference operator*() const { return chain_; }
    const Chain* operator->() const { return &chain_; }
    iterator& operator++() {
      chain_.pop_back();
      next_.pop_back();
      advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.chain_.empty() && b.chain_.empty(); }

   private:
    void advance() {
      while (!chain_.empty()) {
        Id cur = chain_.back();
        if (cur == y_) return;
        const auto& ups = p_->upper_covers(cur);
        std::size_t& k = next_.back();
        while (k < ups.size() && !p_->leq(ups[k], y_)) ++k;
        if (k == ups.size()) {
          chain_.pop_back();
          next_.pop_back();
          continue;
        }
        Id w = ups[k++];
        chain_.push_back(w);
        next_.push_back(0);
      }
    }

    const Poset* p_ = nullptr;
    Id y_ = 0;
    Chain chain_;
    std::vector<std::size_t> next_;
  };

  iterator begin() const { return iterator(p_, x_, y_); }
  iterator end() const { return iterator(); }

 private:
  const Poset* p_;
  Id x_, y_;
};

inline MaximalChains maximal_chains(const Poset& p, Id x, Id y) { return MaximalChains(p, x, y); }

inline std::vector<Chain> collect_maximal_chains(const Poset& p, Id x, Id y) {
  std::vector<Chain> out;
  for_each_maximal_chain(p, x, y, [&](const Chain& c) { out.push_back(c); });
  return out;
}

/// Number of maximal chains of [x, y] (saturating at `cap`).
inline std::uint64_t count_maximal_chains(const Poset& p, Id x, Id y,
                                          std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) {
  if (!p.leq(x, y)) throw NotComparable(x, y);
  std::vector<std::uint64_t> ways(p.size(), 0);
  ways[x] = 1;
  for (Id z : p.linear_order()) {
    if (!ways[z] || z == y) continue;
    for (Id w : p.upper_covers(z))
      if (p.leq(w, y)) ways[w] = std::min(cap, ways[w] + ways[z]);
  }
  return ways[y];
}

inline bool is_maximal_chain(const Poset& p, const Chain& c, Id x, Id y) {
  if (c.empty() || c.front() != x || c.back() != y) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!p.covers(c[i], c[i + 1])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Linear extensions.

/// Exact number of linear extensions by dynamic programming over downsets.
inline std::uint64_t count_linear_extensions(const Poset& p, std::size_t max_downsets = std::size_t{1} << 22) {
  const std::size_t n = p.size();
  if (n > 20) throw TooLarge("linear extension count limited to 20 elements");
  std::vector<std::uint32_t> below(n, 0);
  for (Id x = 0; x < n; ++x)
    p.down_set(x).for_each([&](std::size_t y) {
      if (y != x) below[x] |= std::uint32_t{1} << y;
    });
  std::unordered_map<std::uint32_t, std::uint64_t> layer{{0u, 1u}};
  for (std::size_t k = 0; k < n; ++k) {
    std::unordered_map<std::uint32_t, std::uint64_t> next;
    for (auto [mask, ways] : layer)
      for (Id x = 0; x < n; ++x) {
        std::uint32_t bit = std::uint32_t{1} << x;
        if (!(mask & bit) && (below[x] & ~mask) == 0) next[mask | bit] += ways;
      }
    if (next.size() > max_downsets) throw TooLarge("downset budget exceeded");
    layer = std::move(next);
  }
  return layer.begin()->second;
}

// ---------------------------------------------------------------------------
// Isomorphism (desk-scale backtracking).

namespace detail {

struct ElementInvariant {
  std::size_t down, up, lower, upper;
  int rank, corank;
  friend auto operator<=>(const ElementInvariant&, const ElementInvariant&) = default;
};

inline std::vector<ElementInvariant> invariants(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<int> rank(n, 0), corank(n, 0);
  const auto& ord = p.linear_order();
  for (Id x : ord)
    for (Id y : p.lower_covers(x)) rank[x] = std::max(rank[x], rank[y] + 1);
  for (auto it = ord.rbegin(); it != ord.rend(); ++it)
    for (Id y : p.upper_covers(*it)) corank[*it] = std::max(corank[*it], corank[y] + 1);
  std::vector<ElementInvariant> out(n);
  for (Id x = 0; x < n; ++x)
    out[x] = {p.down_set(x).count(), p.up_set(x).count(), p.lower_covers(x).size(), p.upper_covers(x).size(),
              rank[x], corank[x]};
  return out;
}

}  // namespace detail

/// Order-isomorphism test by backtracking over invariant classes.
inline bool is_isomorphic(const Poset& p, const Poset& q, std::size_t max_elements = 64) {
  const std::size_t n = p.size();
  if (n != q.size()) return false;
  if (n > max_elements) throw TooLarge("isomorphism test limited to " + std::to_string(max_elements) + " elements");
  if (p.cover_relations().size() != q.cover_relations().size()) return false;
  auto ip = detail::invariants(p), iq = detail::invariants(q);
  {
    auto a = ip, b = iq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  const auto& order = p.linear_order();
  std::vector<std::vector<Id>> candidates(n);
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y)
      if (ip[x] == iq[y]) candidates[x].push_back(y);

  std::vector<Id> image(n, 0);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> choice(n, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) return true;
    Id x = order[depth];
    bool placed = false;
    while (choice[depth] < candidates[x].size()) {
      Id y = candidates[x][choice[depth]++];
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        Id u = order[d], v = image[u];
        ok = p.leq(u, x) == q.leq(v, y) && p.leq(x, u) == q.leq(y, v);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      placed = true;
      break;
    }
    if (placed) {
      ++depth;
      if (depth < n) choice[depth] = 0;
      continue;
    }
    if (depth == 0) return false;
    --depth;
    used[image[order[depth]]] = false;
  }
}

}  // namespace comod
