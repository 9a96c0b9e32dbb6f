#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agree/boxicity.hpp"
#include "agree/eta_table.hpp"
#include "agree/graph.hpp"
#include "agree/rational.hpp"

namespace agree {

struct PruneStats {
  std::uint64_t candidates = 0;   // one-vertex extensions tried
  std::uint64_t clique_cuts = 0;  // would create an (r+1)-clique
  std::uint64_t degree_cuts = 0;  // max degree above eta(r-1), or min degree below n-r-1
  std::uint64_t duplicates = 0;   // isomorphic to an earlier survivor
};

struct SearchCertificate {
  std::size_t order = 0;
  std::size_t r = 0;
  std::uint64_t graphs_examined = 0;
  /// Pairwise non-isomorphic, sorted by canonical certificate.
  std::vector<Graph> survivors;
  PruneStats stats;
};

/// Every (2,3)-agreeable graph on n vertices with clique number <= r, up
/// to isomorphism. Graphs grow one vertex at a time; the new vertex's
/// non-neighbours must form a clique (no independent triple), its
/// neighbourhood must hold no r-clique, and degrees stay <= eta(r-1) from
/// `table`. Each level is deduplicated by canonical form. `workers` threads
/// share the extension work; the output does not depend on it.
SearchCertificate enumerate_agreeable(std::size_t n, std::size_t r, const EtaTable& table,
                                      unsigned workers = 1);

/// Levels 1..max_order of the same enumeration (index i holds order i+1),
/// stopping after the first empty level.
std::vector<SearchCertificate> enumerate_agreeable_levels(std::size_t r, std::size_t max_order,
                                                          const EtaTable& table,
                                                          unsigned workers = 1);

struct EtaUpper {
  std::size_t bound = 0;
  EtaCertificate certificate;
};

/// Largest order not excluded by the degree-gap or parity argument. Needs
/// eta(r-1) confirmed in `table`.
EtaUpper eta_upper(std::size_t r, const EtaTable& table);

/// Witness graphs for r = 1..4 (two isolated vertices, the 5-cycle, the
/// 16-edge 8-vertex graph, the 13-vertex 8-regular graph).
std::optional<Graph> registered_eta_witness(std::size_t r);

/// eta_upper combined with the registered witness, which is re-validated.
/// Needs r <= 4 and eta(r-1) confirmed in `table`.
EtaEntry confirm_eta(std::size_t r, const EtaTable& table);

/// Runs the enumeration at order eta_upper(r)+1 and certifies it empty.
/// Throws if a graph is found there.
EtaCertificate exhaustion_certificate(std::size_t r, const EtaTable& table);

struct ProportionResult {
  Rational minimum;
  std::vector<Graph> minimizers;
  std::size_t graphs_considered = 0;
  std::size_t boxicity_searches = 0;
};

/// Minimum of omega/n over (2,3)-agreeable graphs with clique number <= r,
/// optionally restricted to boxicity <= d. Graphs are visited by increasing
/// proportion and boxicity is only decided while it can still matter. An
/// inconclusive boxicity decision is an error.
ProportionResult min_agreement_proportion(std::size_t r, std::optional<std::size_t> d,
                                          const EtaTable& table,
                                          std::uint64_t budget = kDefaultNodeBudget);

struct MainTheoremCheck {
  bool holds = false;
  Rational minimum;
  Rational bound;
  std::vector<std::string> failures;
};

/// min_agreement_proportion(r, d) >= 1/(2d), plus on every minimizer: no
/// universal vertex, d >= n/(2(n - delta - 1)) and omega >= n - delta - 1.
MainTheoremCheck verify_main_theorem(std::size_t d, std::size_t r, const EtaTable& table,
                                     std::uint64_t budget = kDefaultNodeBudget);

}  // namespace agree
