#pragma once

#include <string>
#include <utility>
#include <vector>

#include "comod/poset.hpp"

namespace comod {

struct Sublattice;

/// A poset together with its meet and join tables.
class Lattice {
 public:
  Lattice() = default;

  /// Fills the meet/join tables or reports a witness pair.
  static Lattice from_poset(Poset p) {
    const std::size_t n = p.size();
    auto b = p.bottom(), t = p.top();
    // Work in linear-order positions so the largest lower bound is find_last.
    const auto& order = p.linear_order();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<Bitset> down(n, Bitset(n)), up(n, Bitset(n));
    for (Id x = 0; x < n; ++x) {
      p.down_set(x).for_each([&](std::size_t y) { down[x].set(pos[y]); });
      p.up_set(x).for_each([&](std::size_t y) { up[x].set(pos[y]); });
    }
    std::vector<Id> meet(n * n), join(n * n);
    for (Id x = 0; x < n; ++x) {
      for (Id y = x; y < n; ++y) {
        Id m, j;
        if (p.leq(x, y)) {
          m = x;
          j = y;
        } else if (p.leq(y, x)) {
          m = y;
          j = x;
        } else {
          Bitset ub = up[x] & up[y];
          auto first = ub.find_first();
          if (first == Bitset::npos) throw NotALattice(x, y, "no common upper bound");
          j = order[first];
          if (up[j].count() != ub.count()) throw NotALattice(x, y, "no unique least upper bound");
          Bitset lb = down[x] & down[y];
          auto last = lb.find_last();
          if (last == Bitset::npos) throw NotALattice(x, y, "no common lower bound");
          m = order[last];
          if (down[m].count() != lb.count()) throw NotALattice(x, y, "no unique greatest lower bound");
        }
        meet[x * n + y] = meet[y * n + x] = m;
        join[x * n + y] = join[y * n + x] = j;
      }
    }
    if (!b || !t) throw NotALattice(0, 0, "not bounded");
    return Lattice(std::move(p), std::move(meet), std::move(join), *b, *t);
  }

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Id bottom() const { return bottom_; }
  Id top() const { return top_; }

  Id meet(Id x, Id y) const { return meet_[x * size() + y]; }
  Id join(Id x, Id y) const { return join_[x * size() + y]; }

  bool leq(Id x, Id y) const { return poset_.leq(x, y); }
  bool less(Id x, Id y) const { return poset_.less(x, y); }
  bool covers(Id x, Id y) const { return poset_.covers(x, y); }
  const std::vector<Id>& upper_covers(Id x) const { return poset_.upper_covers(x); }
  const std::vector<Id>& lower_covers(Id x) const { return poset_.lower_covers(x); }
  const Bitset& up_set(Id x) const { return poset_.up_set(x); }
  const Bitset& down_set(Id x) const { return poset_.down_set(x); }
  std::string label(Id x) const { return poset_.label(x); }

  std::vector<Id> atoms() const { return size() > 1 ? upper_covers(bottom_) : std::vector<Id>{}; }
  std::vector<Id> coatoms() const { return size() > 1 ? lower_covers(top_) : std::vector<Id>{}; }

  /// Elements of [x, y] in ascending id order.
  Bitset interval_set(Id x, Id y) const { return up_set(x) & down_set(y); }

  friend Lattice dual(const Lattice& l) {
    return Lattice(dual(l.poset_), l.join_, l.meet_, l.top_, l.bottom_);
  }

 private:
  Lattice(Poset p, std::vector<Id> meet, std::vector<Id> join, Id bottom, Id top)
      : poset_(std::move(p)), meet_(std::move(meet)), join_(std::move(join)), bottom_(bottom), top_(top) {}

  friend Sublattice interval(const Lattice&, Id, Id);

  Poset poset_;
  std::vector<Id> meet_, join_;
  Id bottom_ = 0, top_ = 0;
};

inline Lattice as_lattice(Poset p) { return Lattice::from_poset(std::move(p)); }

/// A lattice induced on a subset of a parent, with ids mapped back.
struct Sublattice {
  Lattice lattice;
  std::vector<Id> parent;  // parent[i] = id in the parent lattice
};

/// The interval [x, y] as a lattice in its own right.
inline Sublattice interval(const Lattice& l, Id x, Id y) {
  if (!l.leq(x, y)) throw NotComparable(x, y);
  std::vector<Id> elems;
  l.interval_set(x, y).for_each([&](std::size_t z) { elems.push_back(static_cast<Id>(z)); });
  const std::size_t k = elems.size();
  std::vector<Id> local(l.size(), 0);
  for (std::size_t i = 0; i < k; ++i) local[elems[i]] = static_cast<Id>(i);
  std::vector<Id> meet(k * k), join(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      meet[i * k + j] = local[l.meet(elems[i], elems[j])];
      join[i * k + j] = local[l.join(elems[i], elems[j])];
    }
  Poset sub = l.poset().induced(elems);
  return Sublattice{Lattice(std::move(sub), std::move(meet), std::move(join), local[x], local[y]), std::move(elems)};
}

}  // namespace comod
