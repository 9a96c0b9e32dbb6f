#include "agree/bounds.hpp"

#include <boost/integer/common_factor.hpp>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "agree/error.hpp"

namespace agree {
namespace {

std::int64_t binomial(std::size_t a, std::size_t b) {
  if (b > a) return 0;
  std::int64_t out = 1;
  for (std::size_t i = 1; i <= b; ++i) {
    out = out * static_cast<std::int64_t>(a - b + i) / static_cast<std::int64_t>(i);
  }
  return out;
}

// Bracket 1 - C(k,d+1)/C(m,d+1); the ratio is taken as 0 when m < d+1.
Rational helly_bracket(std::size_t k, std::size_t m, std::size_t d) {
  if (k < 2 || m < k) throw Error("beta needs 2 <= k <= m");
  if (d < 1) throw Error("beta needs d >= 1");
  const auto den = binomial(m, d + 1);
  if (den == 0) return Rational(1);
  return Rational(1) - Rational(binomial(k, d + 1), den);
}

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
  return buffer;
}

}  // namespace

QuadraticSurd make_surd(Rational a, Rational b, Rational under_root) {
  if (under_root < Rational(0)) throw Error("negative radicand");
  QuadraticSurd out{a, Rational(0), 1};
  if (b == Rational(0) || under_root == Rational(0)) return out;
  // sqrt(p/q) = sqrt(p*q)/q, then pull square factors out of p*q.
  std::int64_t m = under_root.numerator() * under_root.denominator();
  std::int64_t outside = 1;
  for (std::int64_t f = 2; f * f <= m; ++f) {
    while (m % (f * f) == 0) {
      m /= f * f;
      outside *= f;
    }
  }
  const Rational scale = b * Rational(outside, under_root.denominator());
  if (m == 1) {
    out.rational += scale;
  } else {
    out.coefficient = scale;
    out.radicand = m;
  }
  return out;
}

double QuadraticSurd::value() const {
  return to_double(rational) + to_double(coefficient) * std::sqrt(static_cast<double>(radicand));
}

std::string QuadraticSurd::to_string() const {
  if (coefficient == Rational(0)) return agree::to_string(rational);
  const auto den = boost::integer::lcm(rational.denominator(), coefficient.denominator());
  const auto a = rational.numerator() * (den / rational.denominator());
  const auto b = coefficient.numerator() * (den / coefficient.denominator());
  std::string root = "sqrt(" + std::to_string(radicand) + ")";
  std::string magnitude = (b == 1 || b == -1) ? root : std::to_string(b < 0 ? -b : b) + "*" + root;
  std::string body;
  if (a == 0) {
    body = (b < 0 ? "-" : "") + magnitude;
  } else {
    body = std::to_string(a) + (b < 0 ? " - " : " + ") + magnitude;
  }
  if (den == 1) return body;
  return "(" + body + ")/" + std::to_string(den);
}

double beta_convex(std::size_t k, std::size_t m, std::size_t d) {
  const double bracket = to_double(helly_bracket(k, m, d));
  return 1.0 - std::pow(bracket, 1.0 / static_cast<double>(d + 1));
}

std::optional<QuadraticSurd> beta_convex_exact(std::size_t k, std::size_t m, std::size_t d) {
  const auto bracket = helly_bracket(k, m, d);
  if (bracket == Rational(0)) return QuadraticSurd{Rational(1), Rational(0), 1};
  if (bracket == Rational(1)) return QuadraticSurd{Rational(0), Rational(0), 1};
  if (d == 1) return make_surd(Rational(1), Rational(-1), bracket);
  return std::nullopt;
}

Rational main_lower_bound(std::size_t d) {
  if (d < 1) throw Error("main bound needs d >= 1");
  return Rational(1, static_cast<std::int64_t>(2 * d));
}

double root_map(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error("F is defined on [0, 1]");
  return (-2.0 - x + std::sqrt(4.0 - 4.0 * x + 5.0 * x * x)) / (2.0 * (x - 2.0));
}

QuadraticSurd root_map_exact(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) throw Error("F is defined on [0, 1]");
  const Rational den = Rational(2) * (x - 2);
  return make_surd((Rational(-2) - x) / den, Rational(1) / den, Rational(4) - 4 * x + 5 * x * x);
}

double gamma_lower(std::size_t d) {
  if (d == 0) return 1.0;
  double x = 0.5;
  for (std::size_t i = 1; i < d; ++i) x = root_map(x);
  return x;
}

Rational edge_lower_bound(std::size_t n, std::size_t omega) {
  if (omega < 1 || omega > n) throw Error("edge lower bound needs 1 <= omega <= n");
  if (omega + 1 >= n) return Rational(0);
  return Rational(static_cast<std::int64_t>(n * (n - omega - 1)), 2);
}

std::size_t eta_quadratic_bound(std::size_t r) {
  if (r < 1) throw Error("eta bound needs r >= 1");
  return r * (r + 3) / 2;
}

EdgeQuadratic edge_quadratic(std::size_t n, double gamma) {
  const auto nn = static_cast<double>(n);
  return {gamma - 2.0, 2.0 * nn + gamma * nn + 2.0 - gamma, -gamma * nn * nn - 2.0 * nn + gamma * nn};
}

double quadratic_min_root(std::size_t n, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw Error("quadratic root needs 0 < gamma <= 1");
  if (n < 2) throw Error("quadratic root needs n >= 2");
  const auto q = edge_quadratic(n, gamma);
  const double root = std::sqrt(q.discriminant());
  // Cancellation-free pair of roots; b > 0 here.
  const double t = -0.5 * (q.b + root);
  return std::min(t / q.a, q.c / t);
}

std::string round_half_even(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return format_fixed(std::nearbyint(value * scale) / scale, decimals);
}

std::string round_down(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return format_fixed(std::floor(value * scale) / scale, decimals);
}

std::vector<ComparisonRow> comparison_table(std::size_t d_max) {
  std::vector<ComparisonRow> rows;
  for (std::size_t d = 1; d <= d_max; ++d) rows.push_back({d, main_lower_bound(d), gamma_lower(d)});
  return rows;
}

BoundsReport bounds_report(std::size_t d) {
  BoundsReport report;
  report.d = d;
  report.beta_convex = beta_convex(2, 3, d);
  report.beta_convex_exact = beta_convex_exact(2, 3, d);
  report.main_lower = main_lower_bound(d);
  report.gamma_lower = gamma_lower(d);
  if (d == 1) report.gamma_lower_exact = QuadraticSurd{Rational(1, 2), Rational(0), 1};
  if (d == 2) report.gamma_lower_exact = root_map_exact(Rational(1, 2));
  return report;
}

}  // namespace agree
