#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "comod/lattice.hpp"
#include "comod/modularity.hpp"

namespace comod {

/// Chain element carrying its index from S ⊆ {0, ..., n}.
struct IndexedElement {
  Id element = 0;
  int index = 0;
  friend bool operator==(const IndexedElement&, const IndexedElement&) = default;
};

/// Everything a chain-edge labeling remembers about the root walked so far.
///
/// For the comodernistic labeling this is the current element together with
/// the indexed sub-M-chain of [current, top]; root-independent labelings
/// leave `chain` empty. Two roots with equal states receive equal labels on
/// every continuation.
struct WalkerState {
  Id current = 0;
  std::vector<IndexedElement> chain;
  friend bool operator==(const WalkerState&, const WalkerState&) = default;
};

struct WalkerStateHash {
  std::size_t operator()(const WalkerState& s) const {
    std::size_t h = std::hash<Id>{}(s.current);
    for (const auto& e : s.chain) h = h * 1000003u ^ (std::size_t{e.element} << 8 | static_cast<std::size_t>(e.index));
    return h;
  }
};

/// A maximal chain together with the word read off along it.
struct LabeledChain {
  Chain chain;
  std::vector<int> word;
  bool decreasing() const { return std::is_sorted(word.rbegin(), word.rend()); }
  bool increasing() const { return std::adjacent_find(word.begin(), word.end(), std::greater_equal<>{}) == word.end(); }
};

/// Chain-edge labeling presented as a walker: from a state at x and a
/// cover x ⋖ a it yields the label and the state at a.
class Labeling {
 public:
  using StepFn = std::function<std::pair<int, WalkerState>(const WalkerState&, Id)>;

  Labeling(const Lattice& l, WalkerState start, StepFn step, int max_label)
      : l_(&l), start_(std::move(start)), step_(std::move(step)), max_label_(max_label) {}

  const Lattice& lattice() const { return *l_; }
  const WalkerState& start() const { return start_; }
  int max_label() const { return max_label_; }

  std::pair<int, WalkerState> step(const WalkerState& s, Id next) const { return step_(s, next); }

  /// Word of a maximal chain starting at the bottom.
  std::vector<int> word(const Chain& c) const {
    std::vector<int> w;
    WalkerState s = start_;
    for (std::size_t i = 1; i < c.size(); ++i) {
      auto [label, t] = step(s, c[i]);
      w.push_back(label);
      s = std::move(t);
    }
    return w;
  }

  /// Walker state reached along a chain starting at the bottom.
  WalkerState state_after(const Chain& root) const {
    WalkerState s = start_;
    for (std::size_t i = 1; i < root.size(); ++i) s = step(s, root[i]).second;
    return s;
  }

 private:
  const Lattice* l_;
  WalkerState start_;
  StepFn step_;
  int max_label_;
};

/// Chooses the sub-M-chain used to complete the interval [lo, hi].
using ChainSelector = std::function<std::optional<Chain>(Id lo, Id hi)>;

/// Greedy smallest-id selector backed by a shared memo.
inline ChainSelector greedy_selector(std::shared_ptr<const SubMChainFinder> finder) {
  return [finder](Id lo, Id hi) { return finder->sub_m_chain(lo, hi); };
}

/// Selector that routes every completion through the projections
/// (lo ∨ s) ∧ hi of the seed elements. With an M-chain as seeds this makes
/// the comodernistic labeling agree with the supersolvable one; with a
/// chief series of a solvable group it gives the chief-series-seeded
/// labeling of the subgroup lattice.
inline ChainSelector projection_selector(std::shared_ptr<const SubMChainFinder> finder, Chain seeds) {
  return [finder, seeds = std::move(seeds)](Id lo, Id hi) -> std::optional<Chain> {
    const Lattice& l = finder->lattice();
    Chain through;
    for (Id s : seeds) {
      Id p = l.meet(l.join(lo, s), hi);
      if (std::find(through.begin(), through.end(), p) == through.end()) through.push_back(p);
    }
    std::sort(through.begin(), through.end(), [&](Id a, Id b) { return l.less(a, b); });
    return finder->sub_m_chain_through(lo, hi, through);
  };
}

namespace detail {

inline std::pair<int, WalkerState> comodernistic_step(const Lattice& l, const ChainSelector& select,
                                                      const WalkerState& s, Id a) {
  const Id x = s.current;
  if (!l.covers(x, a)) throw BadParams("walker step is not a cover relation");
  const auto& m = s.chain;
  // i = max{index : m_index ∧ a = x}; the bottom of the chain is x itself.
  std::size_t pos = 0;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (l.meet(m[k].element, a) == x) pos = k;
  const int i = m[pos].index;
  const int label = 1 + i;

  // Keep the part above m_i with its indices, complete [a, m_{>i}] below.
  const Id floor = m[pos + 1].element;
  auto completion = select(a, floor);
  if (!completion) throw NotComodernistic(a, floor);
  const std::size_t fresh = completion->size() - 1;
  std::vector<int> available;
  for (std::size_t k = 0; k < pos; ++k) available.push_back(m[k].index);
  if (fresh > available.size())
    throw std::logic_error("not enough free indices to extend the sub-M-chain; chain-length bound violated");

  WalkerState t;
  t.current = a;
  t.chain.reserve(fresh + m.size() - pos - 1);
  const std::size_t offset = available.size() - fresh;
  for (std::size_t k = 0; k < fresh; ++k) t.chain.push_back({(*completion)[k], available[offset + k]});
  for (std::size_t k = pos + 1; k < m.size(); ++k) t.chain.push_back(m[k]);
  return {label, std::move(t)};
}

}  // namespace detail

/// The recursive comodernistic CL-labeling.
///
/// `initial` is the sub-M-chain of [bottom, top] to start from; by default
/// the selector's own choice. New chain elements take the largest free
/// indices below the consumed one, in chain order.
inline Labeling comodernistic_labeling(const Lattice& l, ChainSelector select, std::optional<Chain> initial = {}) {
  if (l.size() == 1) {
    return Labeling(l, WalkerState{l.bottom(), {{l.bottom(), 0}}},
                    [](const WalkerState&, Id) -> std::pair<int, WalkerState> {
                      throw BadParams("singleton lattice has no covers");
                    },
                    0);
  }
  if (!initial) initial = select(l.bottom(), l.top());
  if (!initial) throw NotComodernistic(l.bottom(), l.top());
  if (!is_sub_m_chain(l, *initial, l.bottom(), l.top())) throw NotAnMChain("initial chain is not a sub-M-chain");
  WalkerState start{l.bottom(), {}};
  for (std::size_t k = 0; k < initial->size(); ++k) start.chain.push_back({(*initial)[k], static_cast<int>(k)});
  const int n = static_cast<int>(initial->size()) - 1;
  const Lattice* lp = &l;
  return Labeling(
      l, std::move(start),
      [lp, select = std::move(select)](const WalkerState& s, Id a) {
        return detail::comodernistic_step(*lp, select, s, a);
      },
      n);
}

/// Comodernistic labeling with the default greedy selector. Checks
/// comodernism first and reports a failing interval.
inline Labeling comodernistic_labeling(const Lattice& l, unsigned jobs = 1) {
  auto finder = std::make_shared<SubMChainFinder>(l);
  if (auto fail = finder->comodernism_failure(jobs)) throw NotComodernistic(fail->first, fail->second);
  return comodernistic_labeling(l, greedy_selector(finder));
}

/// A labeling refers to its lattice, which must outlive it.
Labeling comodernistic_labeling(const Lattice&&, unsigned = 1) = delete;
Labeling comodernistic_labeling(const Lattice&&, ChainSelector, std::optional<Chain> = {}) = delete;

// ---------------------------------------------------------------------------
// Supersolvable EL-labeling.

/// max{i : (x ∨ m_{i-1}) ∧ y = x}
inline int ss_label_max_form(const Lattice& l, const Chain& m, Id x, Id y) {
  int best = 0;
  for (std::size_t i = 1; i < m.size(); ++i)
    if (l.meet(l.join(x, m[i - 1]), y) == x) best = static_cast<int>(i);
  return best;
}

/// min{i : (x ∨ m_i) ∧ y = y}
inline int ss_label_min_form(const Lattice& l, const Chain& m, Id x, Id y) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (l.meet(l.join(x, m[i]), y) == y) return static_cast<int>(i);
  return -1;
}

inline Labeling ss_el_labeling(const Lattice&&, const SubMChain&) = delete;

inline Labeling ss_el_labeling(const Lattice& l, const SubMChain& mchain) {
  if (!is_m_chain(l, mchain.elements)) throw NotAnMChain("chain is not a maximal chain of left-modular elements");
  const Lattice* lp = &l;
  return Labeling(
      l, WalkerState{l.bottom(), {}},
      [lp, m = mchain.elements](const WalkerState& s, Id y) {
        if (!lp->covers(s.current, y)) throw BadParams("walker step is not a cover relation");
        return std::pair{ss_label_max_form(*lp, m, s.current, y), WalkerState{y, {}}};
      },
      static_cast<int>(mchain.elements.size()) - 1);
}

/// Labeling that rewrites the labels of `base` through `f(state, next, label)`.
inline Labeling relabel(const Labeling& base, std::function<int(const WalkerState&, Id, int)> f) {
  return Labeling(
      base.lattice(), base.start(),
      [base, f = std::move(f)](const WalkerState& s, Id a) {
        auto [label, t] = base.step(s, a);
        return std::pair{f(s, a, label), std::move(t)};
      },
      base.max_label());
}

// ---------------------------------------------------------------------------
// Chain enumeration under a labeling.

/// Walks every maximal chain of [bottom, top], calling `f(LabeledChain)`.
/// When `prune(word, label)` returns true the branch is abandoned.
template <typename F, typename Prune>
void walk_labeled_chains(const Labeling& lab, F&& f, Prune&& prune) {
  const Lattice& l = lab.lattice();
  struct Frame {
    WalkerState state;
    std::size_t next = 0;
  };
  LabeledChain cur{{l.bottom()}, {}};
  std::vector<Frame> stack{{lab.start(), 0}};
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const Id x = fr.state.current;
    if (x == l.top()) {
      f(static_cast<const LabeledChain&>(cur));
      stack.pop_back();
      cur.chain.pop_back();
      if (!cur.word.empty()) cur.word.pop_back();
      continue;
    }
    const auto& ups = l.upper_covers(x);
    if (fr.next == ups.size()) {
      stack.pop_back();
      cur.chain.pop_back();
      if (!cur.word.empty()) cur.word.pop_back();
      continue;
    }
    Id a = ups[fr.next++];
    auto [label, t] = lab.step(fr.state, a);
    if (prune(cur.word, label)) continue;
    cur.chain.push_back(a);
    cur.word.push_back(label);
    stack.push_back({std::move(t), 0});
  }
}

/// All maximal chains with their words; TooLarge past `max_chains`.
inline std::vector<LabeledChain> labeled_chains(const Labeling& lab, std::size_t max_chains = 10000) {
  std::vector<LabeledChain> out;
  walk_labeled_chains(
      lab,
      [&](const LabeledChain& c) {
        if (out.size() >= max_chains) throw TooLarge("more than " + std::to_string(max_chains) + " maximal chains");
        out.push_back(c);
      },
      [](const std::vector<int>&, int) { return false; });
  return out;
}

/// Maximal chains with weakly decreasing words, in walk order.
inline std::vector<LabeledChain> decreasing_chains(const Labeling& lab) {
  std::vector<LabeledChain> out;
  if (lab.lattice().size() == 1) return {LabeledChain{{lab.lattice().bottom()}, {}}};
  walk_labeled_chains(
      lab, [&](const LabeledChain& c) { out.push_back(c); },
      [](const std::vector<int>& w, int label) { return !w.empty() && label > w.back(); });
  return out;
}

/// (#even-length − #odd-length) decreasing maximal chains.
inline long long mobius_from_labeling(const Labeling& lab) {
  long long mu = 0;
  for (const auto& c : decreasing_chains(lab)) mu += (c.word.size() % 2 == 0) ? 1 : -1;
  return mu;
}

// ---------------------------------------------------------------------------
// CL verification.

struct ClViolation {
  Chain root;  // maximal chain from the bottom to x
  Id x = 0, y = 0;
  std::string reason;
};

struct ClReport {
  bool ok = true;
  std::optional<ClViolation> violation;
  std::size_t walker_states = 0;
  explicit operator bool() const { return ok; }
};

namespace detail {

struct EndpointTally {
  std::vector<int> min_word;
  std::size_t min_count = 0;
  std::size_t increasing = 0;
  bool min_increasing = false;
};

/// Checks every rooted interval [x, y] under one walker state.
inline std::optional<ClViolation> check_rooted_intervals(const Labeling& lab, const WalkerState& s,
                                                          const Chain& root) {
  const Lattice& l = lab.lattice();
  std::unordered_map<Id, EndpointTally> tally;
  struct Frame {
    WalkerState state;
    std::size_t next = 0;
    bool increasing = true;
  };
  std::vector<int> word;
  std::vector<Frame> stack{{s, 0, true}};
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const auto& ups = l.upper_covers(fr.state.current);
    if (fr.next == ups.size()) {
      stack.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    Id a = ups[fr.next++];
    auto [label, t] = lab.step(fr.state, a);
    bool inc = fr.increasing && (word.empty() || word.back() < label);
    word.push_back(label);
    auto& e = tally[a];
    if (inc) ++e.increasing;
    if (e.min_count == 0 || word < e.min_word) {
      e.min_word = word;
      e.min_count = 1;
      e.min_increasing = inc;
    } else if (word == e.min_word) {
      ++e.min_count;
    }
    stack.push_back({std::move(t), 0, inc});
  }
  std::vector<Id> ends;
  for (auto& [y, e] : tally) ends.push_back(y);
  std::sort(ends.begin(), ends.end());
  for (Id y : ends) {
    const auto& e = tally[y];
    std::string reason;
    if (e.increasing != 1)
      reason = std::to_string(e.increasing) + " increasing maximal chains";
    else if (!e.min_increasing || e.min_count != 1)
      reason = "increasing chain is not strictly lexicographically first";
    if (!reason.empty()) return ClViolation{root, s.current, y, reason};
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks the CL conditions on every rooted interval. Roots are explored
/// up to walker-state equivalence.
inline ClReport verify_cl(const Labeling& lab, unsigned jobs = 1) {
  const Lattice& l = lab.lattice();
  std::vector<WalkerState> states{lab.start()};
  std::vector<Chain> roots{{l.bottom()}};
  std::unordered_map<WalkerState, std::size_t, WalkerStateHash> seen{{lab.start(), 0}};
  for (std::size_t k = 0; k < states.size(); ++k) {
    for (Id a : l.upper_covers(states[k].current)) {
      auto t = lab.step(states[k], a).second;
      if (seen.contains(t)) continue;
      seen.emplace(t, states.size());
      Chain r = roots[k];
      r.push_back(a);
      states.push_back(std::move(t));
      roots.push_back(std::move(r));
    }
  }
  ClReport report;
  report.walker_states = states.size();
  std::vector<std::optional<ClViolation>> found(states.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t k = start; k < states.size(); k += stride)
      found[k] = detail::check_rooted_intervals(lab, states[k], roots[k]);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }
  for (auto& f : found)
    if (f) {
      report.ok = false;
      report.violation = std::move(f);
      break;
    }
  return report;
}

// ---------------------------------------------------------------------------
// Structural checks on the comodernistic labeling.

/// The first element above the bottom of every decreasing chain is a
/// complement of the coatom of the starting sub-M-chain.
inline bool first_decreasing_step_complement_check(const Labeling& lab) {
  const Lattice& l = lab.lattice();
  if (l.size() == 1) return true;
  const auto& m = lab.start().chain;
  if (m.size() < 2) throw BadParams("labeling carries no sub-M-chain");
  const Id coatom = m[m.size() - 2].element;
  for (const auto& c : decreasing_chains(lab)) {
    Id c1 = c.chain[1];
    if (l.join(c1, coatom) != l.top() || l.meet(c1, coatom) != l.bottom()) return false;
  }
  return true;
}

/// Words have pairwise distinct letters in 1..n; on a graded lattice of
/// height n each word is a permutation of {1, ..., n}.
inline bool no_repeat_words_check(const Labeling& lab, std::size_t max_chains = 100000) {
  const Lattice& l = lab.lattice();
  const bool graded = is_graded(l.poset());
  const int n = lab.max_label();
  for (const auto& c : labeled_chains(lab, max_chains)) {
    auto w = c.word;
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) return false;
    if (!w.empty() && (w.front() < 1 || w.back() > n)) return false;
    if (graded && static_cast<int>(w.size()) != n) return false;
  }
  return true;
}

/// The unique increasing chain of [bottom, y] under the starting state.
inline std::optional<Chain> increasing_chain_to(const Labeling& lab, Id y) {
  const Lattice& l = lab.lattice();
  std::optional<Chain> found;
  std::size_t count = 0;
  for_each_maximal_chain(l.poset(), l.bottom(), y, [&](const Chain& c) {
    auto w = lab.word(c);
    if (std::adjacent_find(w.begin(), w.end(), std::greater_equal<>{}) == w.end()) {
      ++count;
      found = c;
    }
  });
  if (count != 1) return std::nullopt;
  return found;
}

}  // namespace comod
