#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agree/rational.hpp"

namespace agree {

/// rational + coefficient * sqrt(radicand), radicand square-free (>= 1).
struct QuadraticSurd {
  Rational rational;
  Rational coefficient;
  std::int64_t radicand = 1;

  double value() const;
  std::string to_string() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// a + b*sqrt(p/q) brought to canonical form.
QuadraticSurd make_surd(Rational a, Rational b, Rational under_root);

/// Fractional-Helly agreement bound for convex (k,m)-agreeable societies:
/// 1 - (1 - C(k,d+1)/C(m,d+1))^(1/(d+1)), with C(a,b) = 0 for a < b.
double beta_convex(std::size_t k, std::size_t m, std::size_t d);

/// Exact value where it is a quadratic surd (d = 1, or the bracket is 0 or 1).
std::optional<QuadraticSurd> beta_convex_exact(std::size_t k, std::size_t m, std::size_t d);

/// 1/(2d).
Rational main_lower_bound(std::size_t d);

/// F(x) = (-2 - x + sqrt(4 - 4x + 5x^2)) / (2(x - 2)) on [0, 1]; the limit
/// ratio r/n forced by one boxicity step. Throws outside [0, 1].
double root_map(double x);
QuadraticSurd root_map_exact(const Rational& x);

/// F iterated d-1 times from 1/2. gamma_lower(0) = 1 (complete graphs).
double gamma_lower(std::size_t d);

/// max(0, n(n - omega - 1)/2).
Rational edge_lower_bound(std::size_t n, std::size_t omega);

/// r(r+3)/2.
std::size_t eta_quadratic_bound(std::size_t r);

/// a r^2 + b r + c >= 0 obtained by comparing the lower and upper edge
/// bounds for an n-vertex graph with gamma = gamma(d-1).
struct EdgeQuadratic {
  double a = 0;
  double b = 0;
  double c = 0;

  double discriminant() const { return b * b - 4 * a * c; }
  double operator()(double r) const { return (a * r + b) * r + c; }
};

EdgeQuadratic edge_quadratic(std::size_t n, double gamma);

/// Smaller root of edge_quadratic(n, gamma). Needs 0 < gamma <= 1, n >= 2.
double quadratic_min_root(std::size_t n, double gamma);

std::string round_half_even(double value, int decimals);
std::string round_down(double value, int decimals);

/// One column of the comparison between 1/(2d) and F^[d-1](1/2).
struct ComparisonRow {
  std::size_t d = 0;
  Rational main_lower;
  double gamma_lower = 0;
};

std::vector<ComparisonRow> comparison_table(std::size_t d_max);

struct BoundsReport {
  std::size_t d = 0;
  double beta_convex = 0;  // (k,m) = (2,3)
  std::optional<QuadraticSurd> beta_convex_exact;
  Rational main_lower;
  double gamma_lower = 0;
  std::optional<QuadraticSurd> gamma_lower_exact;  // d <= 2
};

BoundsReport bounds_report(std::size_t d);

}  // namespace agree
