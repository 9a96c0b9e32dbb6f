#include <gtest/gtest.h>

#include "agree/boxicity.hpp"
#include "agree/error.hpp"
#include "agree/fixtures.hpp"
#include "oracles.hpp"

using namespace agree;

TEST(AdigaBound, CompleteMultipartitePairs) {
  for (std::size_t d = 1; d <= 8; ++d) {
    const auto g = fixtures::complete_multipartite_pairs(d);
    EXPECT_EQ(adiga_ratio(g), Rational(static_cast<std::int64_t>(d))) << d;
    EXPECT_EQ(adiga_lower_bound(g), d);
    EXPECT_EQ(roberts_upper_bound(g), d);
  }
}

TEST(AdigaBound, ExactFractions) {
  // n = 5, delta = 2: 5 / (2 * 2)
  EXPECT_EQ(adiga_ratio(cycle_graph(5)), Rational(5, 4));
  EXPECT_EQ(adiga_lower_bound(cycle_graph(5)), 2u);
  // 38a: 8 / (2 * 3)
  EXPECT_EQ(adiga_ratio(fixtures::fig38a_graph()), Rational(4, 3));
  EXPECT_THROW(adiga_ratio(fixtures::wheel4()), Error);
}

TEST(RobertsBound, Values) {
  EXPECT_EQ(roberts_upper_bound(complete_graph(7)), 0u);
  EXPECT_EQ(roberts_upper_bound(cycle_graph(5)), 2u);
  EXPECT_EQ(roberts_upper_bound(fixtures::fig134_graph()), 6u);
}

TEST(SeparatingModel, PathWithSeparatedEnds) {
  const auto p = path_graph(4);
  std::vector<VertexSet> separate(4, 0);
  separate[0] = bit(3);
  separate[3] = bit(0);
  const auto model = separating_interval_model(p, separate);
  ASSERT_TRUE(model.has_value());
  for (const auto& [u, v] : p.edges()) EXPECT_TRUE(intersect((*model)[u], (*model)[v]).has_value());
  EXPECT_FALSE(intersect((*model)[0], (*model)[3]).has_value());
  // An edge cannot be separated.
  separate.assign(4, 0);
  separate[0] = bit(1);
  separate[1] = bit(0);
  EXPECT_FALSE(separating_interval_model(p, separate).has_value());
}

TEST(Decide, RejectsBadArguments) {
  EXPECT_THROW(decide_boxicity_leq(cycle_graph(5), 0), Error);
  EXPECT_THROW(decide_boxicity_leq(complete_graph(4), 1), Error);
  EXPECT_THROW(decide_boxicity_leq(cycle_graph(kMaxBoxicitySearchOrder + 1), 2), Error);
}

TEST(Decide, CycleNeedsTwo) {
  EXPECT_EQ(decide_boxicity_leq(cycle_graph(5), 1).verdict, Verdict::no);
  const auto two = decide_boxicity_leq(cycle_graph(5), 2);
  ASSERT_EQ(two.verdict, Verdict::yes);
  ASSERT_TRUE(two.witness.has_value());
  EXPECT_EQ(two.witness->dimension(), 2u);
  EXPECT_EQ(intersection_graph(*two.witness), cycle_graph(5));
}

TEST(Decide, FigureGraphsHaveBoxicityTwo) {
  for (const auto& g : {fixtures::fig38a_graph(), fixtures::fig38b_graph()}) {
    EXPECT_EQ(decide_boxicity_leq(g, 1).verdict, Verdict::no);
    const auto yes = decide_boxicity_leq(g, 2);
    ASSERT_EQ(yes.verdict, Verdict::yes);
    EXPECT_EQ(intersection_graph(*yes.witness), g);
  }
}

TEST(Decide, OctahedronNeedsThree) {
  const auto g = fixtures::complete_multipartite_pairs(3);
  EXPECT_EQ(decide_boxicity_leq(g, 2).verdict, Verdict::no);
  const auto yes = decide_boxicity_leq(g, 3);
  ASSERT_EQ(yes.verdict, Verdict::yes);
  EXPECT_EQ(intersection_graph(*yes.witness), g);
}

TEST(Decide, TinyBudgetIsInconclusive) {
  const auto r = decide_boxicity_leq(fixtures::complete_multipartite_pairs(3), 2, 3);
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Decide, OneDimensionMatchesIntervalOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_graph(rng, 2 + trial % 7, 0.35 + 0.1 * (trial % 5));
    if (g.is_complete()) continue;
    const auto r = decide_boxicity_leq(g, 1);
    ASSERT_EQ(r.verdict == Verdict::yes, oracle::interval_graph(g)) << trial;
    if (r.witness) ASSERT_EQ(intersection_graph(*r.witness), g);
  }
}

TEST(Decide, TwoDimensionsMatchSandwichOracle) {
  std::mt19937_64 rng(31);
  int no_count = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 4 + trial % 3;
    auto g = oracle::random_graph(rng, n, 0.55);
    if (g.is_complete()) continue;
    const auto r = decide_boxicity_leq(g, 2);
    ASSERT_NE(r.verdict, Verdict::inconclusive);
    const bool expected = oracle::boxicity_at_most_two(g);
    ASSERT_EQ(r.verdict == Verdict::yes, expected) << trial;
    no_count += !expected;
    if (r.witness) ASSERT_EQ(intersection_graph(*r.witness), g);
  }
  // Planted graphs that need three dimensions on six vertices.
  EXPECT_FALSE(oracle::boxicity_at_most_two(fixtures::complete_multipartite_pairs(3)));
  EXPECT_EQ(decide_boxicity_leq(fixtures::complete_multipartite_pairs(3), 2).verdict, Verdict::no);
  (void)no_count;
}

TEST(Report, Values) {
  EXPECT_EQ(boxicity_report(complete_graph(7)).exact, 0u);
  const auto c5 = boxicity_report(cycle_graph(5));
  EXPECT_EQ(c5.exact, 2u);
  EXPECT_FALSE(c5.interval);
  const auto p = boxicity_report(path_graph(5));
  EXPECT_EQ(p.exact, 1u);
  EXPECT_TRUE(p.interval);
  const auto k4 = boxicity_report(fixtures::complete_multipartite_pairs(4));
  EXPECT_EQ(k4.exact, 4u);
  EXPECT_EQ(k4.nodes, 0u);  // bounds meet, no search
  const auto a = boxicity_report(fixtures::fig38a_graph());
  EXPECT_EQ(a.exact, 2u);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(intersection_graph(*a.witness), fixtures::fig38a_graph());
}

TEST(Report, UniversalVerticesAreStripped) {
  const auto r = boxicity_report(fixtures::wheel4());
  EXPECT_EQ(r.stripped_universal, 1u);
  EXPECT_EQ(r.exact, 2u);
}

TEST(Report, Fig38cIsDecided) {
  // Not known beforehand; the search settles it.
  const auto r = boxicity_report(fixtures::fig38c_graph());
  EXPECT_GE(r.lower, 2u);
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_EQ(*r.exact, 3u);
  EXPECT_FALSE(oracle::boxicity_at_most_two(fixtures::fig38c_graph()));
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(oracle::intersection_graph(*r.witness), fixtures::fig38c_graph());
}
