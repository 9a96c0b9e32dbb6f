#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "agree/graph.hpp"

namespace agree {

/// Why a vertex count is impossible for a (2,3)-agreeable graph with
/// clique number at most r.
enum class ExclusionRule {
  degree_gap,  // n - r - 1 > eta(r-1): minimum degree exceeds maximum degree
  parity,      // n - r - 1 = eta(r-1) forces an odd-order odd-regular graph
  exhaustion,  // exhaustive enumeration found no graph
};

std::string to_string(ExclusionRule rule);

struct EtaCertificate {
  ExclusionRule rule = ExclusionRule::degree_gap;
  std::size_t excluded_order = 0;  // smallest n shown impossible
  std::string detail;
};

/// Maximum order of a (2,3)-agreeable graph with clique number <= r.
struct EtaEntry {
  std::size_t r = 0;
  std::optional<std::size_t> confirmed;
  std::size_t upper_bound = 0;
  std::optional<Graph> witness;
  std::optional<EtaCertificate> impossibility;
};

class EtaTable {
 public:
  void set(EtaEntry entry);
  const EtaEntry* find(std::size_t r) const;

  /// Confirmed eta(r), else its upper bound. eta(0) = 0. Throws naming the
  /// missing entry.
  std::size_t vertex_bound(std::size_t r) const;

  /// Throws unless eta(r) is confirmed (r = 0 gives 0).
  std::size_t confirmed(std::size_t r) const;

  /// Bound on eta(r, d), the same quantity restricted to boxicity <= d:
  /// r for d = 0 (only complete graphs), 2r for d = 1, and the
  /// dimension-free vertex_bound(r) otherwise.
  std::size_t dimension_bound(std::size_t r, std::size_t d) const;

  const std::map<std::size_t, EtaEntry>& entries() const { return entries_; }

  /// r = 1..4 confirmed with registered witnesses, r = 5 as an upper bound.
  static EtaTable standard();

 private:
  std::map<std::size_t, EtaEntry> entries_;
};

}  // namespace agree
