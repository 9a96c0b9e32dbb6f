#include <gtest/gtest.h>

#include <algorithm>

#include "agree/bounds.hpp"
#include "agree/eckhoff.hpp"
#include "agree/error.hpp"
#include "agree/fixtures.hpp"
#include "agree/search.hpp"
#include "oracles.hpp"

using namespace agree;

TEST(Exposure, FourBoxFigure) {
  const auto arr = fixtures::exposure_example();
  const ExposureCertificate a{0, 1, Face::lower, Rational(5, 2)};
  EXPECT_TRUE(is_exposing(arr, a));
  EXPECT_TRUE(oracle::exposes(arr, 0, 1, true, Rational(5, 2)));
  const auto candidates = exposure_candidates(arr);
  EXPECT_NE(std::find(candidates.begin(), candidates.end(), a), candidates.end());
  // Scanning axis 1 first finds C on its lower face x = 5/2.
  const auto first = find_exposed(arr);
  EXPECT_EQ(first, (ExposureCertificate{2, 0, Face::lower, Rational(5, 2)}));
}

TEST(Exposure, RejectsWrongCertificates) {
  const auto arr = fixtures::exposure_example();
  // D = [0,4] x [5/4,2]: its lower face x = 0 leaves boxes on both sides.
  EXPECT_FALSE(is_exposing(arr, {3, 0, Face::lower, Rational(0)}));
  // Not a face of A.
  EXPECT_FALSE(is_exposing(arr, {0, 1, Face::lower, Rational(3)}));
  EXPECT_FALSE(is_exposing(arr, {9, 0, Face::lower, Rational(0)}));
}

TEST(Exposure, SingleBox) {
  const Arrangement one(2, {Box({Interval(Rational(1), Rational(2)), Interval(Rational(3), Rational(4))})});
  EXPECT_EQ(find_exposed(one), (ExposureCertificate{0, 0, Face::lower, Rational(1)}));
}

TEST(Exposure, CandidatesAgreeWithOracle) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const auto arr = oracle::random_arrangement(rng, 1 + trial % 9, 1 + trial % 3, 12);
    for (const auto& c : exposure_candidates(arr)) {
      EXPECT_TRUE(is_exposing(arr, c));
      EXPECT_TRUE(oracle::exposes(arr, c.box_index, c.axis, c.side == Face::lower, c.coordinate));
    }
  }
}

TEST(Split, TwoDisjointBoxes) {
  const Arrangement two(1, {Box({Interval(Rational(0), Rational(1))}), Box({Interval(Rational(2), Rational(3))})});
  const auto s = split(two, 0);
  EXPECT_EQ(s.remaining.size(), 1u);
  ASSERT_EQ(s.traces.size(), 1u);
  EXPECT_FALSE(s.traces[0].has_value());
  EXPECT_EQ(s.provenance, (std::vector<std::size_t>{1}));
  EXPECT_THROW(split(Arrangement(1, {two.box(0)}), 0), Error);
}

TEST(Split, FigureTraces) {
  const auto a = fixtures::fig38a();
  const auto s = split(a, find_exposed(a).box_index);
  EXPECT_EQ(s.remaining.size(), 7u);
  EXPECT_EQ(std::count_if(s.traces.begin(), s.traces.end(), [](const auto& t) { return t.has_value(); }), 4);
  const auto z = split(fixtures::z5(), 0);
  EXPECT_EQ(std::count_if(z.traces.begin(), z.traces.end(), [](const auto& t) { return t.has_value(); }), 2);
}

TEST(Split, IdentityOnFigures) {
  for (const auto& arr : {fixtures::z5(), fixtures::fig38a(), fixtures::fig38b(), fixtures::exposure_example()}) {
    for (std::size_t k = 1; k < arr.size(); ++k) {
      EXPECT_TRUE(verify_split_identity(arr, k));
      for (std::size_t i = 0; i < arr.size(); ++i) EXPECT_TRUE(verify_split_identity(arr, i, k));
    }
  }
  EXPECT_THROW(verify_split_identity(fixtures::z5(), 0), Error);
  EXPECT_THROW(verify_split_identity(fixtures::z5(), 5), Error);
}

TEST(EdgeBounds, Recurrence) {
  const auto table = EtaTable::standard();
  // Step eta(r-1, d-1): r - 1 for d = 1, 2(r - 1) for d = 2.
  EXPECT_EQ(e_upper_recurrence(8, 3, 1, table), 3 + 5 * 2);
  EXPECT_EQ(e_upper_recurrence(8, 3, 2, table), 3 + 5 * 4);
  EXPECT_EQ(e_upper_recurrence(3, 3, 2, table), 3);
  EXPECT_THROW(e_upper_recurrence(2, 3, 2, table), Error);
}

TEST(EdgeBounds, ClosedForm) {
  EXPECT_DOUBLE_EQ(e_upper_closed(8, 3, 2, 0.5), 3.0 + 5.0 * 2.0 / 0.5);
  EXPECT_THROW(e_upper_closed(8, 3, 2, 0.0), Error);
  EXPECT_THROW(e_upper_closed(8, 3, 0, 0.5), Error);
}

TEST(EdgeBounds, SandwichOnRealizedFixtures) {
  std::vector<Arrangement> realized = {fixtures::z5(), fixtures::fig38a(), fixtures::fig38b()};
  for (std::size_t d = 2; d <= 5; ++d) realized.push_back(fixtures::complete_multipartite_pairs_boxes(d));
  for (std::size_t r = 2; r <= 6; ++r) realized.push_back(fixtures::two_clusters(r));
  for (const auto& arr : realized) {
    const auto g = intersection_graph(arr);
    ASSERT_TRUE(is_agreeable(g, 2, 3));
    const auto n = g.order();
    const auto omega = clique_number(g);
    const auto edges = static_cast<double>(g.edge_count());
    EXPECT_LE(to_double(edge_lower_bound(n, omega)), edges);
    EXPECT_LE(edges, e_upper_closed(n, omega, arr.dimension(), gamma_lower(arr.dimension() - 1)));
  }
}
