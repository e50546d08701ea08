#include <gtest/gtest.h>

#include "common.hpp"
#include "hyperreg/error.hpp"
#include "hyperreg/matchings.hpp"

using namespace hyperreg;
using namespace testing_support;

TEST(Matchings, ClassifyFamilies) {
  const Hypergraph h1 = named("H1");
  const EdgeFamily outer = classify_family(h1, {0, 2});
  EXPECT_TRUE(outer.flags.matching);
  EXPECT_FALSE(outer.flags.semi_induced);
  EXPECT_FALSE(outer.flags.induced);
  EXPECT_EQ(outer.weight, 4);
  EXPECT_EQ(outer.support, ids({1, 2, 3, 4, 5, 6}));

  const EdgeFamily all = classify_family(h1, {0, 1, 2});
  EXPECT_FALSE(all.flags.matching);
  EXPECT_TRUE(all.flags.semi_induced);
  EXPECT_EQ(all.weight, 3);

  const Hypergraph c = contraction(named("H2"), x(1));
  const EdgeFamily both = classify_family(c, {0, 1});
  EXPECT_TRUE(both.flags.induced);
  EXPECT_EQ(both.weight, 2);
}

TEST(Matchings, ClassifyBySets) {
  const Hypergraph h1 = named("H1");
  const std::vector<VertexSet> sets{ids({4, 5, 6}), ids({1, 2, 3})};
  EXPECT_EQ(classify_family(h1, sets).edges, (std::vector<std::size_t>{0, 2}));
  const std::vector<VertexSet> bad{ids({1, 2})};
  try {
    classify_family(h1, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownEdge);
  }
  try {
    classify_family(h1, std::vector<std::size_t>{0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownEdge);
  }
}

TEST(Matchings, Invariants) {
  const MatchingInvariants h1 = matching_invariants(named("H1"));
  EXPECT_EQ(h1.c, 2);
  EXPECT_EQ(h1.c_prime, 3);
  EXPECT_EQ(h1.m, 4);
  EXPECT_TRUE(h1.induced_witness.flags.induced);
  EXPECT_TRUE(h1.semi_induced_witness.flags.semi_induced);
  EXPECT_TRUE(h1.matching_witness.flags.matching);
  EXPECT_EQ(h1.matching_witness.weight, 4);

  const MatchingInvariants star = matching_invariants(named("star3"));
  EXPECT_EQ(star.c, 1);
  EXPECT_EQ(star.c_prime, 1);
  EXPECT_EQ(star.m, 1);

  const MatchingInvariants u = matching_invariants(named("uniform_example"));
  EXPECT_EQ(u.c, 2);
  EXPECT_EQ(u.c_prime, 2);
  EXPECT_EQ(u.m, 2);

  const MatchingInvariants empty = matching_invariants(named("edgeless3"));
  EXPECT_EQ(empty.c, 0);
  EXPECT_EQ(empty.m, 0);
}

TEST(Matchings, OrderingHolds) {
  for (const std::string& name : named_instances()) {
    const MatchingInvariants mi = matching_invariants(named(name));
    EXPECT_LE(mi.c, mi.c_prime) << name;
    EXPECT_LE(mi.c_prime, mi.m) << name;
  }
}

TEST(Matchings, WitnessOrder) {
  const EdgeFamily lex = best_semi_induced_matching(named("H1"));
  const EdgeFamily few = best_semi_induced_matching(named("H1"), {}, WitnessOrder::FewestEdges);
  EXPECT_EQ(lex.weight, 3);
  EXPECT_EQ(few.weight, 3);
  EXPECT_LE(few.edges.size(), lex.edges.size());
}

TEST(Matchings, TwoCollage) {
  const std::vector<std::size_t> outer{0, 2};
  EXPECT_TRUE(is_two_collage(named("H1"), outer));
  const std::vector<std::size_t> first{0};
  EXPECT_TRUE(is_two_collage(named("star3"), first));
  EXPECT_FALSE(is_two_collage(named("C5"), first));
  const std::vector<std::size_t> bad{7};
  EXPECT_THROW(is_two_collage(named("C5"), bad), Error);
}

TEST(Matchings, MaximalMatchings) {
  const auto star = maximal_matchings(named("star3"));
  EXPECT_EQ(star.size(), 3U);
  const auto p4 = maximal_matchings(named("P4"));
  EXPECT_EQ(p4.size(), 2U);
}

TEST(Matchings, IndependentSetFromSemiInduced) {
  const Hypergraph h1 = named("H1");
  const EdgeFamily all = classify_family(h1, {0, 1, 2});
  const VertexSet s = independent_set_from_semi_induced(h1, all);
  EXPECT_EQ(s, ids({3, 5, 6}));
  EXPECT_TRUE(is_independent(h1.edges(), s));
  try {
    independent_set_from_semi_induced(h1, classify_family(h1, {0, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSemiInduced);
  }
}

TEST(Matchings, SearchLimit) {
  Limits limits;
  limits.matching_edge_cap = 2;
  try {
    matching_invariants(named("H1"), limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SearchLimitExceeded);
  }
}
