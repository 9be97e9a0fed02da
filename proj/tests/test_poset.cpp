#include <gtest/gtest.h>

#include <random>

#include "comod/comod.hpp"
#include "oracles.hpp"

using namespace comod;

TEST(Poset, CoversAndOrder) {
  Poset p = Poset::from_covers(4, {{0, 1}, {1, 2}, {0, 3}});
  EXPECT_TRUE(p.leq(0, 2));
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_FALSE(p.leq(3, 2));
  EXPECT_FALSE(p.comparable(2, 3));
  EXPECT_EQ(p.cover_relations().size(), 3u);
  EXPECT_EQ(p.minimal_elements(), std::vector<Id>{0});
  EXPECT_EQ(p.maximal_elements().size(), 2u);
  EXPECT_FALSE(p.is_bounded());
}

TEST(Poset, RedundantEdgesAreNotCovers) {
  Poset p = Poset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(p.cover_relations().size(), 2u);
  EXPECT_TRUE(p.covers(0, 1));
  EXPECT_FALSE(p.covers(0, 2));
}

TEST(Poset, CycleRejected) {
  EXPECT_THROW(Poset::from_covers(3, {{0, 1}, {1, 2}, {2, 0}}), Error);
  EXPECT_THROW(Poset::from_covers(2, {{0, 5}}), Error);
}

TEST(Poset, DualSwapsOrder) {
  Poset p = chain_poset(3);
  Poset d = dual(p);
  EXPECT_TRUE(d.leq(2, 0));
  EXPECT_EQ(dual(d), p);
}

TEST(Poset, InducedSubposet) {
  Poset p = chain_poset(5);
  std::vector<Id> keep{0, 2, 4};
  Poset q = p.induced(keep);
  EXPECT_EQ(q.size(), 3u);
  EXPECT_TRUE(q.covers(0, 1));
  EXPECT_TRUE(is_isomorphic(q, chain_poset(3)));
}

TEST(Poset, LabeledPosetCounts) {
  const std::vector<std::size_t> expect{0, 1, 3, 19, 219};
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(oracle::all_labeled_posets(n).size(), expect[n]) << n;
}

TEST(Poset, LinearExtensionsMatchOracle) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : oracle::all_labeled_posets(n))
      ASSERT_EQ(count_linear_extensions(p), oracle::linear_extensions(p));
}

TEST(Poset, LinearExtensionsRandomSeven) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::vector<Cover> edges;
    for (Id a = 0; a < 7; ++a)
      for (Id b = a + 1; b < 7; ++b)
        if (rng() % 4 == 0) edges.emplace_back(a, b);
    Poset p = Poset::from_covers(7, std::span<const Cover>(edges));
    EXPECT_EQ(count_linear_extensions(p), oracle::linear_extensions(p));
  }
}

TEST(Poset, LinearExtensionsKnown) {
  EXPECT_EQ(count_linear_extensions(antichain_poset(5)), 120u);
  EXPECT_EQ(count_linear_extensions(chain_poset(6)), 1u);
  Poset n = Poset::from_covers(4, {{0, 2}, {1, 2}, {1, 3}});
  EXPECT_EQ(count_linear_extensions(n), 5u);
}

TEST(Poset, HasseConnected) {
  EXPECT_TRUE(is_hasse_connected(chain_poset(4)));
  EXPECT_FALSE(is_hasse_connected(antichain_poset(2)));
  EXPECT_TRUE(is_hasse_connected(antichain_poset(1)));
}

TEST(Poset, Isomorphism) {
  Poset a = Poset::from_covers(4, {{0, 2}, {1, 2}, {1, 3}});
  Poset b = Poset::from_covers(4, {{3, 1}, {0, 1}, {0, 2}});
  Poset c = Poset::from_covers(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
  EXPECT_TRUE(is_isomorphic(a, b));
  EXPECT_FALSE(is_isomorphic(a, c));
  EXPECT_FALSE(is_isomorphic(chain_poset(3), antichain_poset(3)));
}

TEST(Poset, IsomorphismClassCounts) {
  const std::vector<std::size_t> expect{1, 2, 5, 16};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Poset> reps;
    for (auto& p : oracle::all_labeled_posets(n))
      if (std::none_of(reps.begin(), reps.end(), [&](const Poset& q) { return is_isomorphic(p, q); }))
        reps.push_back(std::move(p));
    EXPECT_EQ(reps.size(), expect[n - 1]) << n;
  }
}

TEST(Poset, MaximalChains) {
  Lattice b3 = boolean_lattice(3);
  EXPECT_EQ(count_maximal_chains(b3.poset(), b3.bottom(), b3.top()), 6u);
  std::size_t seen = 0;
  for (const auto& c : maximal_chains(b3.poset(), b3.bottom(), b3.top())) {
    EXPECT_TRUE(is_maximal_chain(b3.poset(), c, b3.bottom(), b3.top()));
    ++seen;
  }
  EXPECT_EQ(seen, 6u);
  EXPECT_FALSE(is_maximal_chain(b3.poset(), Chain{0, 7}, 0, 7));
}

TEST(Poset, GradedAndHeight) {
  EXPECT_TRUE(is_graded(pentagon_poset()) == false);
  EXPECT_TRUE(is_graded(boolean_lattice(3).poset()));
  EXPECT_EQ(height(boolean_lattice(4).poset()), 4);
}

TEST(Lattice, MeetJoinMatchOracle) {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    Lattice l = oracle::random_lattice(rng, 9);
    for (Id x = 0; x < l.size(); ++x)
      for (Id y = 0; y < l.size(); ++y) {
        ASSERT_EQ(l.meet(x, y), *oracle::naive_meet(l.poset(), x, y));
        ASSERT_EQ(l.join(x, y), *oracle::naive_join(l.poset(), x, y));
      }
  }
}

TEST(Lattice, NotALattice) {
  Poset bow = bounded_extension(bowtie_poset());
  EXPECT_THROW(as_lattice(bow), NotALattice);
  EXPECT_THROW(as_lattice(antichain_poset(2)), Error);
}

TEST(Lattice, Interval) {
  Lattice b4 = boolean_lattice(4);
  auto s = interval(b4, 1, 15);
  EXPECT_EQ(s.lattice.size(), 8u);
  EXPECT_TRUE(is_isomorphic(s.lattice.poset(), boolean_lattice(3).poset()));
  EXPECT_THROW(interval(b4, 1, 2), NotComparable);
}

TEST(Poset, SmallExamples) {
  Poset one = Poset::from_covers(1, std::span<const Cover>{});
  EXPECT_TRUE(one.leq(0, 0));
  Poset c3 = chain_poset(3);
  std::size_t pairs = 0;
  for (Id x = 0; x < 3; ++x)
    for (Id y = 0; y < 3; ++y) pairs += c3.leq(x, y) ? 1 : 0;
  EXPECT_EQ(pairs, 6u);
  EXPECT_TRUE(is_isomorphic(dual(c3), c3));
  EXPECT_EQ(count_linear_extensions(antichain_poset(3)), 6u);
  EXPECT_FALSE(is_hasse_connected(antichain_poset(3)));
  EXPECT_EQ(height(chain_poset(5)), 4);
}

TEST(Poset, Pentagon) {
  Poset n5 = pentagon_poset();  // 0, a, b, c, 1
  EXPECT_FALSE(is_graded(n5));
  EXPECT_EQ(height(n5), 3);
  EXPECT_TRUE(is_isomorphic(dual(n5), n5));
  Lattice l = pentagon();
  EXPECT_EQ(l.atoms(), (std::vector<Id>{1, 2}));
  auto co = l.coatoms();
  std::sort(co.begin(), co.end());
  EXPECT_EQ(co, (std::vector<Id>{2, 3}));
  std::vector<std::size_t> lengths;
  for (const auto& c : collect_maximal_chains(n5, 0, 4)) lengths.push_back(c.size() - 1);
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(count_linear_extensions(n5), 3u);
  EXPECT_EQ(oracle::linear_extensions(n5), 3u);
  EXPECT_FALSE(is_isomorphic(n5, boolean_lattice(2).poset()));
}

TEST(Lattice, BooleanMeetIsIntersection) {
  Lattice b3 = boolean_lattice(3);
  for (Id x = 0; x < 8; ++x)
    for (Id y = 0; y < 8; ++y) {
      EXPECT_EQ(b3.meet(x, y), (x & y));
      EXPECT_EQ(b3.join(x, y), (x | y));
    }
}

TEST(Lattice, BowtieWitness) {
  try {
    as_lattice(bowtie_poset());
    FAIL() << "bowtie accepted";
  } catch (const NotALattice& e) {
    EXPECT_NE(std::string(e.what()).size(), 0u);
  }
}
