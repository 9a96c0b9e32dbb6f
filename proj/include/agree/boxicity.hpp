#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "agree/geometry.hpp"
#include "agree/graph.hpp"
#include "agree/rational.hpp"

namespace agree {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Largest graph accepted by the exact boxicity search.
inline constexpr std::size_t kMaxBoxicitySearchOrder = 14;

/// n / (2(n - delta - 1)) as an exact fraction. Throws if g has a universal
/// vertex.
Rational adiga_ratio(const Graph& g);

/// Ceiling of adiga_ratio(g).
std::size_t adiga_lower_bound(const Graph& g);

/// 0 for complete graphs, floor(n/2) otherwise.
std::size_t roberts_upper_bound(const Graph& g);

/// Searches for an ordering of the vertices on a line that yields intervals
/// in which every edge of g overlaps and every pair listed in `separate`
/// is disjoint (separate[v] holds the partners of v; must be symmetric).
/// Each vertex interval is closed as soon as all its neighbours have
/// started, so the reachable states are the sets of started vertices.
/// Returns the intervals on success.
std::optional<std::vector<Interval>> separating_interval_model(const Graph& g,
                                                               std::span<const VertexSet> separate);

enum class Verdict { yes, no, inconclusive };

struct BoxicityDecision {
  Verdict verdict = Verdict::inconclusive;
  /// Realizing arrangement with dimension d, present iff verdict == yes.
  std::optional<Arrangement> witness;
  std::uint64_t nodes = 0;
};

/// Exact test of box(g) <= d. Each non-edge is assigned to an axis on which
/// it must be separated; axes are interchangeable, so a non-edge may open a
/// new axis only if it is the next unused one. Every assignment is checked
/// per axis with separating_interval_model. "no" only after the whole
/// reduced space is exhausted; "inconclusive" once `budget` nodes are spent.
BoxicityDecision decide_boxicity_leq(const Graph& g, std::size_t d,
                                     std::uint64_t budget = kDefaultNodeBudget);

struct BoxicityReport {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<std::size_t> exact;
  std::optional<Arrangement> witness;

  bool interval = false;
  /// Universal vertices removed before applying the Adiga bound; that bound
  /// is computed on the stripped graph, which is an induced subgraph.
  std::size_t stripped_universal = 0;
  std::size_t adiga_on_stripped = 0;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

BoxicityReport boxicity_report(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);

}  // namespace agree
