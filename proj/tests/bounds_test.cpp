#include <gtest/gtest.h>

#include <cmath>

#include "agree/bounds.hpp"
#include "agree/error.hpp"

using namespace agree;

TEST(Beta, PublishedValues) {
  EXPECT_NEAR(beta_convex(2, 3, 1), 1.0 - std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(beta_convex(2, 3, 1), 0.18350, 1e-5);
  EXPECT_EQ(beta_convex(2, 3, 2), 0.0);
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_EQ(beta_convex(5, 5, d), 1.0);
  EXPECT_THROW(beta_convex(1, 3, 1), Error);
  EXPECT_THROW(beta_convex(4, 3, 1), Error);
}

TEST(Beta, ExactForms) {
  const auto one = beta_convex_exact(2, 3, 1);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->to_string(), "(3 - sqrt(6))/3");  // 1 - sqrt(2/3)
  EXPECT_NEAR(one->value(), 1.0 - std::sqrt(2.0 / 3.0), 1e-15);
  const auto zero = beta_convex_exact(2, 3, 2);
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->to_string(), "0");
  EXPECT_EQ(beta_convex_exact(3, 3, 1)->to_string(), "1");
  EXPECT_FALSE(beta_convex_exact(3, 5, 2).has_value());
}

TEST(MainBound, Values) {
  EXPECT_EQ(main_lower_bound(1), Rational(1, 2));
  EXPECT_EQ(main_lower_bound(2), Rational(1, 4));
  EXPECT_EQ(main_lower_bound(3), Rational(1, 6));
  EXPECT_THROW(main_lower_bound(0), Error);
}

TEST(RootMap, Values) {
  EXPECT_EQ(root_map(0.0), 0.0);
  EXPECT_NEAR(root_map(0.5), (5.0 - std::sqrt(13.0)) / 6.0, 1e-12);
  EXPECT_NEAR(root_map(root_map(0.5)), 0.114484, 1e-6);
  EXPECT_THROW(root_map(-0.1), Error);
  EXPECT_THROW(root_map(1.5), Error);
  EXPECT_EQ(root_map_exact(Rational(1, 2)).to_string(), "(5 - sqrt(13))/6");
  EXPECT_EQ(root_map_exact(Rational(0)).to_string(), "0");
  EXPECT_THROW(root_map_exact(Rational(3, 2)), Error);
}

TEST(RootMap, ExactMatchesFloatingOnAGrid) {
  for (int i = 0; i <= 40; ++i) {
    const Rational x(i, 40);
    EXPECT_NEAR(root_map_exact(x).value(), root_map(to_double(x)), 1e-12) << i;
  }
}

TEST(GammaLower, TableRow) {
  EXPECT_EQ(gamma_lower(0), 1.0);
  EXPECT_EQ(gamma_lower(1), 0.5);
  const double expected[] = {0.5, 0.232408, 0.114484, 0.057045, 0.028498};
  for (std::size_t d = 1; d <= 5; ++d) EXPECT_NEAR(gamma_lower(d), expected[d - 1], 5e-6) << d;
  for (std::size_t d = 1; d <= 12; ++d) EXPECT_GE(to_double(main_lower_bound(d)), gamma_lower(d));
}

TEST(Rounding, PublishedPrecision) {
  EXPECT_EQ(round_half_even(1.0 / 6.0, 3), "0.167");
  EXPECT_EQ(round_half_even(0.125, 3), "0.125");
  EXPECT_EQ(round_half_even(0.125, 2), "0.12");  // tie to even
  EXPECT_EQ(round_down(gamma_lower(4), 2), "0.05");
  EXPECT_EQ(round_down(gamma_lower(5), 2), "0.02");
  EXPECT_EQ(round_down(gamma_lower(2), 2), "0.23");
}

TEST(ComparisonTable, Rows) {
  const auto rows = comparison_table(5);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[2].d, 3u);
  EXPECT_EQ(rows[2].main_lower, Rational(1, 6));
  EXPECT_NEAR(rows[2].gamma_lower, 0.114484, 1e-6);
}

TEST(EdgeLowerBound, Values) {
  EXPECT_EQ(edge_lower_bound(5, 2), Rational(5));
  EXPECT_EQ(edge_lower_bound(8, 3), Rational(16));
  EXPECT_EQ(edge_lower_bound(7, 6), Rational(0));
  EXPECT_EQ(edge_lower_bound(13, 4), Rational(52));
  EXPECT_THROW(edge_lower_bound(3, 0), Error);
  EXPECT_THROW(edge_lower_bound(3, 4), Error);
}

TEST(EtaQuadratic, Values) {
  EXPECT_EQ(eta_quadratic_bound(1), 2u);
  EXPECT_EQ(eta_quadratic_bound(4), 14u);
  EXPECT_EQ(eta_quadratic_bound(5), 20u);
}

TEST(Quadratic, SmallerRoot) {
  EXPECT_NEAR(quadratic_min_root(1'000'000, 0.5) / 1e6, root_map(0.5), 1e-4);
  for (std::size_t n = 5; n <= 200; ++n) {
    for (const double gamma : {0.1, 0.5, 1.0}) {
      const auto q = edge_quadratic(n, gamma);
      const double nn = static_cast<double>(n);
      const double b = 2 * nn + gamma * nn + 2 - gamma;
      const double c = -gamma * nn * nn - 2 * nn + gamma * nn;
      EXPECT_DOUBLE_EQ(q.discriminant(), b * b - 4 * (gamma - 2) * c);
      EXPECT_GE(q.discriminant(), 0.0);
      const double root = quadratic_min_root(n, gamma);
      EXPECT_GT(root, 0.0);
      EXPECT_NEAR(q(root) / (nn * nn), 0.0, 1e-9);
    }
  }
  EXPECT_THROW(quadratic_min_root(10, 0.0), Error);
  EXPECT_THROW(quadratic_min_root(1, 0.5), Error);
}

TEST(BoundsReport, Fields) {
  const auto r = bounds_report(2);
  EXPECT_EQ(r.main_lower, Rational(1, 4));
  EXPECT_EQ(r.beta_convex, 0.0);
  ASSERT_TRUE(r.gamma_lower_exact.has_value());
  EXPECT_EQ(r.gamma_lower_exact->to_string(), "(5 - sqrt(13))/6");
}
