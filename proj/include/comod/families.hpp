#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "comod/lattice.hpp"
#include "comod/poset.hpp"

namespace comod {

inline constexpr std::size_t kDefaultMaxElements = 5000;

/// A lattice whose element ids index a decode table.
template <typename T>
struct Family {
  Lattice lattice;
  std::vector<T> decode;
};

// ---------------------------------------------------------------------------
// Set partitions.

/// Canonical set partition: block_of is a restricted growth string, so
/// blocks are numbered by their minimum element.
struct SetPartition {
  std::vector<Id> block_of;

  std::size_t ground() const { return block_of.size(); }
  std::size_t block_count() const {
    Id m = 0;
    for (Id b : block_of) m = std::max(m, b + 1);
    return block_of.empty() ? 0 : m;
  }
  std::vector<std::vector<Id>> blocks() const {
    std::vector<std::vector<Id>> out(block_count());
    for (Id x = 0; x < ground(); ++x) out[block_of[x]].push_back(x);
    return out;
  }
  bool same_block(Id x, Id y) const { return block_of[x] == block_of[y]; }

  /// Relabels arbitrary block ids into restricted growth form.
  static SetPartition normalized(const std::vector<Id>& raw) {
    SetPartition p;
    std::map<Id, Id> rename;
    for (Id b : raw) {
      auto [it, fresh] = rename.emplace(b, static_cast<Id>(rename.size()));
      p.block_of.push_back(it->second);
    }
    return p;
  }

  static SetPartition from_blocks(std::size_t n, const std::vector<std::vector<Id>>& blocks) {
    std::vector<Id> raw(n, static_cast<Id>(-1));
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (Id x : blocks[b]) {
        if (x >= n || raw[x] != static_cast<Id>(-1)) throw BadParams("blocks do not partition the ground set");
        raw[x] = static_cast<Id>(b);
      }
    if (std::find(raw.begin(), raw.end(), static_cast<Id>(-1)) != raw.end())
      throw BadParams("blocks do not cover the ground set");
    return normalized(raw);
  }

  static SetPartition discrete(std::size_t n) {
    SetPartition p;
    p.block_of.resize(n);
    std::iota(p.block_of.begin(), p.block_of.end(), Id{0});
    return p;
  }

  static SetPartition full(std::size_t n) { return SetPartition{std::vector<Id>(n, 0)}; }

  /// "12|3" with 1-based elements; commas separate elements once n > 9.
  std::string to_string() const {
    std::string s;
    const bool commas = ground() > 9;
    for (const auto& b : blocks()) {
      if (!s.empty()) s += '|';
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (commas && i > 0) s += ',';
        s += std::to_string(b[i] + 1);
      }
    }
    return s;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

/// a ≤ b in refinement order: every block of a sits inside a block of b.
inline bool refines(const SetPartition& a, const SetPartition& b) {
  std::vector<Id> image(a.block_count(), static_cast<Id>(-1));
  for (Id x = 0; x < a.ground(); ++x) {
    Id& img = image[a.block_of[x]];
    if (img == static_cast<Id>(-1))
      img = b.block_of[x];
    else if (img != b.block_of[x])
      return false;
  }
  return true;
}

/// Common refinement.
inline SetPartition partition_meet(const SetPartition& a, const SetPartition& b) {
  std::vector<Id> raw(a.ground());
  const Id nb = static_cast<Id>(b.block_count());
  for (Id x = 0; x < a.ground(); ++x) raw[x] = a.block_of[x] * nb + b.block_of[x];
  return SetPartition::normalized(raw);
}

/// Finest common coarsening.
inline SetPartition partition_join(const SetPartition& a, const SetPartition& b) {
  const std::size_t n = a.ground();
  std::vector<Id> parent(n);
  std::iota(parent.begin(), parent.end(), Id{0});
  auto find = [&](Id x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Id> first_a(n, static_cast<Id>(-1)), first_b(n, static_cast<Id>(-1));
  for (Id x = 0; x < n; ++x) {
    for (auto [first, blk] : {std::pair{&first_a, a.block_of[x]}, std::pair{&first_b, b.block_of[x]}}) {
      Id& f = (*first)[blk];
      if (f == static_cast<Id>(-1))
        f = x;
      else
        parent[find(x)] = find(f);
    }
  }
  std::vector<Id> raw(n);
  for (Id x = 0; x < n; ++x) raw[x] = find(x);
  return SetPartition::normalized(raw);
}

inline std::uint64_t bell_number(std::size_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

/// Calls f on every set partition of n elements, in restricted-growth-string
/// lexicographic order.
template <typename F>
void for_each_set_partition(std::size_t n, F&& f) {
  if (n == 0) {
    f(SetPartition{});
    return;
  }
  SetPartition p;
  p.block_of.assign(n, 0);
  std::vector<Id> max_before(n, 1);  // 1 + max of block_of[0..i-1]
  max_before[0] = 0;
  for (;;) {
    f(static_cast<const SetPartition&>(p));
    std::size_t i = n - 1;
    while (i > 0 && p.block_of[i] >= max_before[i]) --i;
    if (i == 0) return;
    ++p.block_of[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      max_before[j] = std::max(max_before[j - 1], p.block_of[j - 1] + 1);
      p.block_of[j] = 0;
    }
  }
}

inline constexpr std::size_t kMaxPartitionGround = 12;

/// Set partitions of n satisfying pred, refusing more than max_elements.
template <typename Pred>
std::vector<SetPartition> filtered_partitions(std::size_t n, Pred&& pred, std::size_t max_elements) {
  if (n > kMaxPartitionGround)
    throw TooLarge("ground set of size " + std::to_string(n) + " is too large to enumerate partitions");
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const SetPartition& p) {
    if (!pred(p)) return;
    if (out.size() >= max_elements)
      throw TooLarge("family exceeds " + std::to_string(max_elements) + " elements");
    out.push_back(p);
  });
  return out;
}

/// Refinement order on a list of partitions, as a lattice.
inline Family<SetPartition> partition_family(std::vector<SetPartition> parts) {
  std::vector<std::string> labels;
  for (const auto& p : parts) labels.push_back(p.to_string());
  Poset poset = Poset::from_leq(
      parts.size(), [&](Id a, Id b) { return refines(parts[a], parts[b]); }, std::move(labels));
  return {as_lattice(std::move(poset)), std::move(parts)};
}

inline void check_max_elements(std::uint64_t count, std::size_t max_elements) {
  if (count > max_elements)
    throw TooLarge("family has " + std::to_string(count) + " elements, above the cap of " +
                   std::to_string(max_elements));
}

inline Family<SetPartition> partition_lattice(std::size_t n, std::size_t max_elements = kDefaultMaxElements) {
  if (n < 1) throw BadParams("partition lattice needs n >= 1");
  check_max_elements(bell_number(n), max_elements);
  return partition_family(filtered_partitions(n, [](const SetPartition&) { return true; }, max_elements));
}

// ---------------------------------------------------------------------------
// Order partitions.

/// Level-set test: the digraph on blocks induced by the cover relations of
/// p has no directed cycle.
inline bool is_order_partition(const Poset& p, const SetPartition& pi) {
  if (pi.ground() != p.size()) throw BadParams("partition and poset have different ground sets");
  const std::size_t k = pi.block_count();
  std::vector<std::vector<Id>> succ(k);
  std::vector<std::size_t> indeg(k, 0);
  for (auto [x, y] : p.cover_relations()) {
    Id bx = pi.block_of[x], by = pi.block_of[y];
    if (bx == by) continue;
    succ[bx].push_back(by);
    ++indeg[by];
  }
  std::vector<Id> ready;
  for (Id b = 0; b < k; ++b)
    if (indeg[b] == 0) ready.push_back(b);
  std::size_t seen = 0;
  while (!ready.empty()) {
    Id b = ready.back();
    ready.pop_back();
    ++seen;
    for (Id c : succ[b])
      if (--indeg[c] == 0) ready.push_back(c);
  }
  return seen == k;
}

/// Every block contains everything lying between two of its members.
inline bool is_convex_partition(const Poset& p, const SetPartition& pi) {
  for (const auto& block : pi.blocks()) {
    Bitset in(p.size());
    for (Id x : block) in.set(x);
    for (Id a : block)
      for (Id c : block) {
        if (!p.less(a, c)) continue;
        Bitset between = p.up_set(a) & p.down_set(c);
        if (!between.is_subset_of(in)) return false;
      }
  }
  return true;
}

/// O(P). Meets are checked against common refinement on construction.
inline Family<SetPartition> order_congruence_lattice(const Poset& p, std::size_t max_elements = kDefaultMaxElements) {
  auto fam = partition_family(
      filtered_partitions(p.size(), [&](const SetPartition& pi) { return is_order_partition(p, pi); }, max_elements));
  const auto& l = fam.lattice;
  for (Id a = 0; a < l.size(); ++a)
    for (Id b = a + 1; b < l.size(); ++b)
      if (fam.decode[l.meet(a, b)] != partition_meet(fam.decode[a], fam.decode[b]))
        throw std::logic_error("order partitions are not closed under common refinement");
  return fam;
}

inline Family<SetPartition> order_convexity_lattice(const Poset& p, std::size_t max_elements = kDefaultMaxElements) {
  return partition_family(
      filtered_partitions(p.size(), [&](const SetPartition& pi) { return is_convex_partition(p, pi); }, max_elements));
}

/// x and y are compatible when one covers the other or they are incomparable.
inline bool compatible(const Poset& p, Id x, Id y) {
  return x != y && (p.covers(x, y) || p.covers(y, x) || !p.comparable(x, y));
}

inline std::vector<std::pair<Id, Id>> compatible_pairs(const Poset& p) {
  std::vector<std::pair<Id, Id>> out;
  for (Id x = 0; x < p.size(); ++x)
    for (Id y = x + 1; y < p.size(); ++y)
      if (compatible(p, x, y)) out.emplace_back(x, y);
  return out;
}

/// P with x and y identified. The merged element takes id min(x, y); ids
/// above max(x, y) shift down by one.
inline Poset quotient(const Poset& p, Id x, Id y) {
  if (x >= p.size()) throw BadId(x);
  if (y >= p.size()) throw BadId(y);
  if (!compatible(p, x, y)) throw NotCompatible(x, y);
  const Id w = std::min(x, y), gone = std::max(x, y);
  const std::size_t n = p.size() - 1;
  auto to_new = [&](Id z) { return z == gone ? w : (z > gone ? z - 1 : z); };
  std::vector<Bitset> up(n, Bitset(n));
  for (Id a = 0; a < p.size(); ++a)
    p.up_set(a).for_each([&](std::size_t b) { up[to_new(a)].set(to_new(static_cast<Id>(b))); });
  // Warshall closure; merging incomparable elements can create new relations.
  for (Id k = 0; k < n; ++k)
    for (Id a = 0; a < n; ++a)
      if (up[a].test(k)) up[a] |= up[k];
  std::vector<std::string> labels;
  for (Id z = 0; z < p.size(); ++z) {
    if (z == gone) continue;
    labels.push_back(z == w ? p.label(x) + "~" + p.label(y) : p.label(z));
  }
  return Poset::from_up_sets(std::move(up), std::move(labels));
}

// ---------------------------------------------------------------------------
// Block-size constrained subposets of the partition lattice.

inline Family<SetPartition> k_equal_lattice(std::size_t n, std::size_t k, std::size_t max_elements = kDefaultMaxElements) {
  if (k < 1 || k > n) throw BadParams("k-equal lattice needs 1 <= k <= n");
  return partition_family(filtered_partitions(
      n,
      [&](const SetPartition& pi) {
        for (const auto& b : pi.blocks())
          if (b.size() > 1 && b.size() < k) return false;
        return true;
      },
      max_elements));
}

enum class Quantifier { ForAll, Exists };

/// aff[x] is the affinity of element x, in 1..n.
using AffinityMap = std::vector<std::size_t>;

inline Family<SetPartition> affinity_lattice(const AffinityMap& aff, Quantifier mode,
                                             std::size_t max_elements = kDefaultMaxElements) {
  const std::size_t n = aff.size();
  if (n < 1) throw BadParams("affinity map is empty");
  for (auto a : aff)
    if (a < 1 || a > n) throw BadParams("affinity values must lie in 1..n");
  return partition_family(filtered_partitions(
      n,
      [&](const SetPartition& pi) {
        for (const auto& b : pi.blocks()) {
          if (b.size() == 1) continue;
          auto fits = [&](Id x) { return b.size() >= aff[x]; };
          bool ok = mode == Quantifier::ForAll ? std::all_of(b.begin(), b.end(), fits)
                                               : std::any_of(b.begin(), b.end(), fits);
          if (!ok) return false;
        }
        return true;
      },
      max_elements));
}

// ---------------------------------------------------------------------------
// Signed partitions of {0, 1, ..., n}.

struct SignedPartition {
  std::vector<Id> block_of;  // restricted growth string; block 0 holds 0
  std::vector<int> sign;     // 0 in the zero block, otherwise +1 / -1

  std::size_t n() const { return block_of.size() - 1; }
  bool in_zero_block(Id x) const { return block_of[x] == 0; }

  std::vector<std::vector<Id>> blocks() const {
    Id m = 0;
    for (Id b : block_of) m = std::max(m, b + 1);
    std::vector<std::vector<Id>> out(m);
    for (Id x = 0; x < block_of.size(); ++x) out[block_of[x]].push_back(x);
    return out;
  }

  /// Renumbers blocks and flips each signed block so its minimum is positive.
  static SignedPartition normalized(const std::vector<Id>& raw_block, std::vector<int> sign) {
    SignedPartition s;
    std::map<Id, Id> rename;
    rename.emplace(raw_block[0], 0);
    for (Id b : raw_block) {
      auto [it, fresh] = rename.emplace(b, static_cast<Id>(rename.size()));
      s.block_of.push_back(it->second);
    }
    std::vector<int> flip(rename.size(), 0);
    for (Id x = 0; x < s.block_of.size(); ++x) {
      Id b = s.block_of[x];
      if (b == 0) {
        sign[x] = 0;
      } else if (flip[b] == 0) {
        flip[b] = sign[x] < 0 ? -1 : 1;
      }
      sign[x] *= b == 0 ? 0 : flip[b];
    }
    s.sign = std::move(sign);
    return s;
  }

  /// "0,3|1,-2|4": zero block first, then signed blocks by minimum.
  std::string to_string() const {
    std::string s;
    auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      if (b > 0) s += '|';
      for (std::size_t i = 0; i < bs[b].size(); ++i) {
        if (i > 0) s += ',';
        Id x = bs[b][i];
        if (sign[x] < 0) s += '-';
        s += std::to_string(x);
      }
    }
    return s;
  }

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
  friend auto operator<=>(const SignedPartition&, const SignedPartition&) = default;
};

/// Containment order: the zero block grows, and each signed block lands in
/// the zero block or inside one signed block with a consistent pattern up to
/// a global flip.
inline bool signed_leq(const SignedPartition& a, const SignedPartition& b) {
  auto blocks = a.blocks();
  for (Id x : blocks[0])
    if (!b.in_zero_block(x)) return false;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const auto& blk = blocks[i];
    const Id x0 = blk.front();
    if (b.in_zero_block(x0)) {
      for (Id x : blk)
        if (!b.in_zero_block(x)) return false;
      continue;
    }
    const int rel = a.sign[x0] * b.sign[x0];
    for (Id x : blk)
      if (b.block_of[x] != b.block_of[x0] || a.sign[x] * b.sign[x] != rel) return false;
  }
  return true;
}

template <typename F>
void for_each_signed_partition(std::size_t n, F&& f) {
  for_each_set_partition(n + 1, [&](const SetPartition& p) {
    std::vector<Id> free;  // non-minimal members of signed blocks
    std::vector<bool> first_seen(p.block_count(), false);
    for (Id x = 0; x <= n; ++x) {
      Id b = p.block_of[x];
      if (b == 0) continue;
      if (first_seen[b]) free.push_back(x);
      first_seen[b] = true;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      SignedPartition s{p.block_of, std::vector<int>(n + 1, 1)};
      for (Id x = 0; x <= n; ++x)
        if (p.block_of[x] == 0) s.sign[x] = 0;
      for (std::size_t i = 0; i < free.size(); ++i)
        if (mask >> i & 1) s.sign[free[i]] = -1;
      f(static_cast<const SignedPartition&>(s));
    }
  });
}

/// Elements covering s: two signed blocks merged under either relative
/// pattern, or a signed block absorbed by the zero block.
inline std::vector<SignedPartition> signed_upper_covers(const SignedPartition& s) {
  std::vector<SignedPartition> out;
  const auto bs = s.blocks();
  for (std::size_t i = 1; i < bs.size(); ++i) {
    {
      std::vector<Id> raw = s.block_of;
      for (Id x : bs[i]) raw[x] = 0;
      out.push_back(SignedPartition::normalized(raw, s.sign));
    }
    for (std::size_t j = i + 1; j < bs.size(); ++j)
      for (int eps : {1, -1}) {
        std::vector<Id> raw = s.block_of;
        std::vector<int> sign = s.sign;
        for (Id x : bs[j]) {
          raw[x] = static_cast<Id>(i);
          sign[x] *= eps;
        }
        out.push_back(SignedPartition::normalized(raw, std::move(sign)));
      }
  }
  return out;
}

inline std::uint64_t dowling_count(std::size_t n) {
  std::uint64_t count = 0;
  for_each_set_partition(n + 1, [&](const SetPartition& p) {
    std::size_t free = 0;
    std::vector<bool> seen(p.block_count(), false);
    for (Id x = 0; x <= n; ++x) {
      Id b = p.block_of[x];
      if (b != 0 && seen[b]) ++free;
      if (b != 0) seen[b] = true;
    }
    count += std::uint64_t{1} << free;
  });
  return count;
}

/// Π^B_n, ordered by the closure of its cover relations.
inline Family<SignedPartition> signed_partition_lattice(std::size_t n, std::size_t max_elements = kDefaultMaxElements) {
  if (n < 1) throw BadParams("signed partition lattice needs n >= 1");
  if (n + 1 > kMaxPartitionGround) throw TooLarge("ground set too large");
  check_max_elements(dowling_count(n), max_elements);
  std::vector<SignedPartition> elems;
  for_each_signed_partition(n, [&](const SignedPartition& s) { elems.push_back(s); });
  std::map<SignedPartition, Id> index;
  for (Id i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<Cover> covers;
  std::vector<std::string> labels;
  for (Id i = 0; i < elems.size(); ++i) {
    for (const auto& t : signed_upper_covers(elems[i])) covers.emplace_back(i, index.at(t));
    labels.push_back(elems[i].to_string());
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  Poset p = Poset::from_covers(elems.size(), std::span<const Cover>(covers), std::move(labels));
  return {as_lattice(std::move(p)), std::move(elems)};
}

/// Π^B_{n,k,h}: signed non-singleton blocks of size at least k; zero block a
/// singleton or of size at least h + 1.
inline Family<SignedPartition> signed_kh_lattice(std::size_t n, std::size_t k, std::size_t h,
                                                 std::size_t max_elements = kDefaultMaxElements) {
  if (!(1 <= h && h < k && k <= n)) throw BadParams("signed k,h-equal lattice needs 1 <= h < k <= n");
  auto full = signed_partition_lattice(n, std::max(max_elements, std::size_t(dowling_count(n))));
  std::vector<Id> keep;
  for (Id i = 0; i < full.decode.size(); ++i) {
    auto bs = full.decode[i].blocks();
    bool ok = bs[0].size() == 1 || bs[0].size() >= h + 1;
    for (std::size_t b = 1; ok && b < bs.size(); ++b)
      if (bs[b].size() > 1 && bs[b].size() < k) ok = false;
    if (ok) keep.push_back(i);
  }
  check_max_elements(keep.size(), max_elements);
  std::vector<SignedPartition> decode;
  for (Id i : keep) decode.push_back(full.decode[i]);
  return {as_lattice(full.lattice.poset().induced(keep)), std::move(decode)};
}

// ---------------------------------------------------------------------------
// Stock lattices and posets.

/// Subsets of {1..n}; the id of a subset is its bitmask.
inline Lattice boolean_lattice(std::size_t n) {
  if (n > 12) throw TooLarge("boolean lattice too large");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> labels;
  for (std::size_t m = 0; m < size; ++m) {
    std::string s = "{";
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
    labels.push_back(s + "}");
  }
  return as_lattice(Poset::from_leq(size, [](Id a, Id b) { return (a & b) == a; }, std::move(labels)));
}

/// Chain with n elements.
inline Lattice chain_lattice(std::size_t n) {
  if (n < 1) throw BadParams("chain needs at least one element");
  return as_lattice(chain_poset(n));
}

/// N5: 0 < a < c < 1, 0 < b < 1, with ids 0, a=1, b=2, c=3, 1=4.
inline Poset pentagon_poset() {
  return Poset::from_covers(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}, {"0", "a", "b", "c", "1"});
}

inline Lattice pentagon() { return as_lattice(pentagon_poset()); }

/// M_k: a bottom, a top, and k pairwise incomparable atoms.
inline Lattice diamond(std::size_t k) {
  std::vector<Cover> covers;
  for (Id i = 1; i <= k; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, static_cast<Id>(k + 1));
  }
  return as_lattice(Poset::from_covers(k + 2, std::span<const Cover>(covers)));
}

/// a1, a2 < b1, b2 with ids 0..3; no bounds.
inline Poset bowtie_poset() {
  return Poset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {"a1", "a2", "b1", "b2"});
}

/// Faces of an n-gon: empty face 0, vertices 1..n, edges n+1..2n, polygon
/// 2n+1. Edge n+i joins vertices i and i+1 (cyclically).
inline Lattice ngon_face_lattice(std::size_t n) {
  if (n < 3) throw BadParams("polygon needs at least 3 vertices");
  const Id top = static_cast<Id>(2 * n + 1);
  std::vector<Cover> covers;
  std::vector<std::string> labels{"empty"};
  for (Id i = 1; i <= n; ++i) {
    covers.emplace_back(0, i);
    labels.push_back("v" + std::to_string(i));
  }
  for (Id i = 1; i <= n; ++i) {
    const Id e = static_cast<Id>(n) + i;
    const Id next = i == n ? 1 : i + 1;
    covers.emplace_back(i, e);
    covers.emplace_back(next, e);
    covers.emplace_back(e, top);
    labels.push_back("e" + std::to_string(i) + std::to_string(next));
  }
  labels.push_back("polygon");
  return as_lattice(Poset::from_covers(top + 1, std::span<const Cover>(covers), std::move(labels)));
}

/// B3 with one cover removed. Ids: 0, m1=1, a=2, b=3, m2=4, c=5, d=6, 1=7.
inline Lattice fig1_lattice() {
  return as_lattice(Poset::from_covers(
      8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 6}, {2, 4}, {2, 5}, {3, 5}, {4, 7}, {5, 7}, {6, 7}},
      {"0", "m1", "a", "b", "m2", "c", "d", "1"}));
}

/// Adds a new bottom and top to p.
inline Poset bounded_extension(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Cover> covers;
  for (auto c : p.cover_relations()) covers.emplace_back(c.first + 1, c.second + 1);
  for (Id x : p.minimal_elements()) covers.emplace_back(0, x + 1);
  for (Id x : p.maximal_elements()) covers.emplace_back(x + 1, static_cast<Id>(n + 1));
  if (n == 0) covers.emplace_back(0, 1);
  std::vector<std::string> labels{"0"};
  for (Id x = 0; x < n; ++x) labels.push_back(p.label(x));
  labels.push_back("1");
  return Poset::from_covers(n + 2, std::span<const Cover>(covers), std::move(labels));
}

}  // namespace comod
