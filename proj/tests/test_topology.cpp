#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "comod/comod.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace comod;

namespace {

SimplicialComplex complex_of(std::vector<std::vector<Id>> facets) {
  SimplicialComplex k;
  std::set<Id> v;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    v.insert(f.begin(), f.end());
  }
  k.vertices.assign(v.begin(), v.end());
  k.facets = std::move(facets);
  return k;
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  std::iota(o.begin(), o.end(), std::size_t{0});
  return o;
}

}  // namespace

TEST(Shelling, Hexagon) {
  auto k = complex_of({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  EXPECT_TRUE(is_shelling(k, identity_order(6)).ok);
  EXPECT_TRUE(oracle::is_shelling_by_faces(k, identity_order(6)));
  // Jumping across the ring breaks it.
  std::vector<std::size_t> bad{0, 3, 1, 2, 4, 5};
  EXPECT_FALSE(is_shelling(k, bad).ok);
}

TEST(Shelling, TwoDisjointEdges) {
  auto k = complex_of({{0, 1}, {2, 3}});
  EXPECT_FALSE(is_shelling(k, {0, 1}).ok);
  EXPECT_FALSE(is_shelling(k, {1, 0}).ok);
  auto r = is_shelling(k, {0, 1});
  EXPECT_EQ(r.position, 1u);
}

TEST(Shelling, NonpureExample) {
  // A triangle with an edge hanging off a vertex: shellable, triangle first.
  auto k = complex_of({{0, 1, 2}, {2, 3}});
  EXPECT_TRUE(is_shelling(k, {0, 1}).ok);
  EXPECT_FALSE(is_shelling(k, {1, 0}).ok);
}

TEST(Shelling, AgreesWithFaceOracle) {
  std::mt19937 rng(83);
  for (int t = 0; t < 400; ++t) {
    std::vector<std::vector<Id>> facets;
    const std::size_t count = 2 + rng() % 4;
    for (int attempt = 0; attempt < 100 && facets.size() < count; ++attempt) {
      std::vector<Id> f;
      for (Id v = 0; v < 6; ++v)
        if (rng() % 3 == 0) f.push_back(v);
      if (f.empty()) continue;
      bool redundant = false;
      for (const auto& g : facets)
        if (std::includes(g.begin(), g.end(), f.begin(), f.end()) || std::includes(f.begin(), f.end(), g.begin(), g.end()))
          redundant = true;
      if (!redundant) facets.push_back(f);
    }
    auto k = complex_of(facets);
    auto order = identity_order(k.facets.size());
    std::shuffle(order.begin(), order.end(), rng);
    ASSERT_EQ(is_shelling(k, order).ok, oracle::is_shelling_by_faces(k, order));
  }
}

TEST(OrderComplex, Basics) {
  auto k = order_complex(boolean_lattice(3).poset());
  EXPECT_EQ(k.vertices.size(), 6u);
  EXPECT_EQ(k.facets.size(), 6u);
  EXPECT_EQ(k.dimension(), 1u);
  EXPECT_THROW(order_complex(antichain_poset(2)), NotBounded);
  EXPECT_THROW(order_complex(chain_poset(1)), DegenerateBoundedPair);
  auto empty = order_complex(chain_poset(2));
  EXPECT_TRUE(empty.vertices.empty());
}

TEST(Euler, MethodsAgreeWithOracle) {
  for (const auto& e : corpus::lattices()) {
    const auto& l = e.lattice;
    if (l.size() < 2 || count_maximal_chains(l.poset(), l.bottom(), l.top(), 2001) > 2000) continue;
    auto k = order_complex(l.poset());
    const long long chi = oracle::reduced_euler(k);
    EXPECT_EQ(euler_characteristic(k, EulerMethod::Explicit), chi) << e.name;
    if (k.facets.size() <= 24) {
      EXPECT_EQ(euler_characteristic(k, EulerMethod::InclusionExclusion), chi) << e.name;
    }
    EXPECT_EQ(euler_characteristic(k), chi) << e.name;
    EXPECT_EQ(mobius_brute(l), chi) << e.name;
  }
}

TEST(Mobius, BruteMatchesChainSum) {
  std::mt19937 rng(89);
  for (int t = 0; t < 300; ++t) {
    Lattice l = oracle::random_lattice(rng, 10);
    for (Id x = 0; x < l.size(); ++x)
      for (Id y = 0; y < l.size(); ++y)
        if (l.leq(x, y)) {
          ASSERT_EQ(mobius_brute(l.poset(), x, y), oracle::mobius_chain_sum(l.poset(), x, y));
        }
  }
  EXPECT_THROW(mobius_brute(pentagon_poset(), 1, 2), NotComparable);
}

TEST(LexShelling, CorpusLabelingsShell) {
  for (const auto& e : corpus::lattices()) {
    const auto& l = e.lattice;
    if (l.size() < 2 || count_maximal_chains(l.poset(), l.bottom(), l.top(), 301) > 300) continue;
    auto lab = comodernistic_labeling(l);
    EXPECT_TRUE(verify_lex_shelling(lab).ok) << e.name;
    // Same order, checked face by face.
    auto chains = labeled_chains(lab);
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
    SimplicialComplex k;
    for (const auto& c : chains) {
      std::vector<Id> f(c.chain.begin() + 1, c.chain.end() - 1);
      std::sort(f.begin(), f.end());
      k.facets.push_back(f);
    }
    EXPECT_TRUE(oracle::is_shelling_by_faces(k, identity_order(k.facets.size()))) << e.name;
  }
}

TEST(LexShelling, HomotopySummary) {
  Lattice pi4 = partition_lattice(4).lattice;
  auto h = homotopy_summary(comodernistic_labeling(pi4));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.begin()->first, 1);
  EXPECT_EQ(h.begin()->second, 6u);
  Lattice fig1 = fig1_lattice();
  EXPECT_TRUE(homotopy_summary(comodernistic_labeling(fig1)).empty() ||
              homotopy_summary(comodernistic_labeling(fig1)).begin()->second > 0);
}
