#pragma once

#include <string>
#include <vector>

#include "agree/eta_table.hpp"

namespace agree {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // observed value, or the error message
};

struct SuiteOptions {
  /// Include the exhaustion at n = 9, r = 3 (the slowest check).
  bool exhaustive = true;
};

/// Every reference assertion on the fixtures, bounds, eta table and
/// boxicity values. Exceptions inside a check become failures.
std::vector<CheckResult> run_reference_suite(const SuiteOptions& options = {});

/// r, found value, expected value; r = 5 shows the upper bound as "<=18".
std::string render_eta_table(const EtaTable& table);

/// d, 1/(2d) and F^[d-1](1/2), each next to the published value.
std::string render_comparison_table(std::size_t d_max = 5);

/// Values of the published comparison table, d = 1..5.
struct PublishedRow {
  std::size_t d;
  std::string main_lower;
  std::string gamma_lower;
};
const std::vector<PublishedRow>& published_comparison();

/// 1/(2d) rounded half-even and F^[d-1](1/2) rounded down, to the number
/// of decimals the published value uses.
std::string format_main_lower(std::size_t d, int decimals);
std::string format_gamma_lower(std::size_t d, int decimals);

}  // namespace agree
