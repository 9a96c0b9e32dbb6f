// Command-line front end: analysis of arrangement and graph files, bound
// tables, the eta search, boxicity decisions and the reference suite.
#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "agree/bounds.hpp"
#include "agree/boxicity.hpp"
#include "agree/error.hpp"
#include "agree/io.hpp"
#include "agree/reference_suite.hpp"
#include "agree/report.hpp"
#include "agree/search.hpp"

namespace {

using namespace agree;

constexpr int kOk = 0;
constexpr int kAssertionFailure = 1;
constexpr int kUsageError = 2;

struct AnalyzeArgs {
  std::string input;
  bool boxicity = false;
  std::uint64_t budget = kDefaultNodeBudget;
  bool json = false;
  bool as_arrangement = false;
};

int run_analyze(const AnalyzeArgs& args) {
  const auto input = load_input(args.input);
  if (args.as_arrangement && !std::holds_alternative<Arrangement>(input)) {
    throw Error(args.input + " is a graph with no known box arrangement");
  }
  const auto a = analyze(input, {args.boxicity, args.budget});
  std::cout << (args.json ? render_json(a) : render_text(a));
  return kOk;
}

int run_bounds(std::size_t d_max) {
  if (d_max < 1) throw Error("--d-max must be >= 1");
  std::cout << render_comparison_table(d_max) << "\n";
  std::cout << "beta(2,3,d):\n";
  for (std::size_t d = 1; d <= d_max; ++d) {
    const auto r = bounds_report(d);
    std::cout << "  d=" << d << "  " << r.beta_convex;
    if (r.beta_convex_exact) std::cout << "  = " << r.beta_convex_exact->to_string();
    std::cout << "\n";
  }
  const auto f = root_map_exact(Rational(1, 2));
  std::cout << "F(1/2) = " << f.to_string() << " = " << f.value() << "\n";
  return kOk;
}

int run_search_eta(std::size_t r_max, bool exhaust, unsigned workers) {
  if (r_max < 1 || r_max > 5) throw Error("--r must be in 1..5");
  EtaTable table;
  for (std::size_t r = 1; r <= r_max; ++r) {
    if (r <= 4) {
      table.set(confirm_eta(r, table));
    } else {
      const auto up = eta_upper(r, table);
      table.set(EtaEntry{r, std::nullopt, up.bound, std::nullopt, up.certificate});
    }
    const auto& entry = *table.find(r);
    std::cout << "r=" << r << ": eta ";
    if (entry.confirmed) {
      std::cout << "= " << *entry.confirmed << " (witness on " << entry.witness->order() << " vertices, "
                << entry.witness->edge_count() << " edges)";
    } else {
      std::cout << "<= " << entry.upper_bound << " (no witness at desk scale)";
    }
    std::cout << "\n  " << to_string(entry.impossibility->rule) << ": " << entry.impossibility->detail << "\n";
    if (exhaust && r <= 3) {
      const auto n = entry.upper_bound + 1;
      const auto cert = enumerate_agreeable(n, r, table, workers);
      std::cout << "  exhaustion at n=" << n << ": " << cert.survivors.size() << " graphs, "
                << cert.graphs_examined << " extensions examined, " << cert.stats.clique_cuts
                << " clique cuts, " << cert.stats.degree_cuts << " degree cuts, " << cert.stats.duplicates
                << " duplicates\n";
      if (!cert.survivors.empty()) return kAssertionFailure;
    }
  }
  return kOk;
}

struct BoxicityArgs {
  std::string input;
  std::optional<std::size_t> decide;
  std::uint64_t budget = kDefaultNodeBudget;
};

int run_boxicity(const BoxicityArgs& args) {
  const auto input = load_input(args.input);
  const Graph g = std::holds_alternative<Graph>(input) ? std::get<Graph>(input)
                                                       : intersection_graph(std::get<Arrangement>(input));
  if (args.decide) {
    const auto result = decide_boxicity_leq(g, *args.decide, args.budget);
    std::cout << "box <= " << *args.decide << ": " << verdict_name(result.verdict) << " (" << result.nodes
              << " nodes)\n";
    if (result.witness) std::cout << serialize_arrangement(*result.witness);
    return kOk;
  }
  const auto r = boxicity_report(g, args.budget);
  std::cout << "lower " << r.lower << ", upper " << r.upper;
  if (r.exact) std::cout << ", exact " << *r.exact;
  if (r.budget_exhausted) std::cout << " (budget exhausted)";
  std::cout << "\ninterval: " << (r.interval ? "yes" : "no") << "\nadiga on stripped graph: "
            << r.adiga_on_stripped << " (" << r.stripped_universal << " universal removed)\nnodes: " << r.nodes
            << "\n";
  if (r.witness) std::cout << serialize_arrangement(*r.witness);
  return kOk;
}

int run_verify_paper(bool quick) {
  const auto results = run_reference_suite({!quick});
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    failed += !r.passed;
  }
  std::cout << "\n" << render_eta_table(EtaTable::standard()) << "\n" << render_comparison_table(5) << "\n";
  std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kOk : kAssertionFailure;
}

int run_rho(std::size_t r, std::optional<std::size_t> d) {
  const auto table = EtaTable::standard();
  const auto result = min_agreement_proportion(r, d, table);
  std::cout << "minimum " << to_string(result.minimum) << " over " << result.graphs_considered
            << " graphs (" << result.boxicity_searches << " boxicity searches)\n";
  for (const auto& g : result.minimizers) std::cout << "minimizer:\n" << serialize_graph(g);
  if (d) {
    const auto check = verify_main_theorem(*d, r, table);
    std::cout << "bound 1/(2d) = " << to_string(check.bound) << ": " << (check.holds ? "holds" : "FAILS") << "\n";
    for (const auto& f : check.failures) std::cout << "  " << f << "\n";
    return check.holds ? kOk : kAssertionFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Box arrangements, agreeable graphs and boxicity"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze an arrangement or graph file, or a fixture");
  analyze_cmd->add_option("input", analyze_args.input, "File path or fixture name")->required();
  analyze_cmd->add_flag("--boxicity", analyze_args.boxicity, "Include a boxicity report");
  analyze_cmd->add_option("--boxicity-budget", analyze_args.budget, "Node budget for the boxicity search");
  analyze_cmd->add_flag("--json", analyze_args.json, "Structured output");
  analyze_cmd->add_flag("--as-arrangement", analyze_args.as_arrangement, "Require a box arrangement");

  std::size_t d_max = 5;
  auto* bounds_cmd = app.add_subcommand("bounds", "Print the bound comparison table");
  bounds_cmd->add_option("--d-max", d_max, "Largest dimension");

  std::size_t r_max = 4;
  bool exhaust = false;
  unsigned workers = 1;
  auto* eta_cmd = app.add_subcommand("search-eta", "Bound and confirm eta(r) for r = 1..N");
  eta_cmd->add_option("--r", r_max, "Largest r (1..5)");
  eta_cmd->add_flag("--exhaust", exhaust, "Also enumerate one order past the bound (r <= 3)");
  eta_cmd->add_option("--workers", workers, "Threads for the enumeration");

  BoxicityArgs box_args;
  auto* box_cmd = app.add_subcommand("boxicity", "Boxicity bounds, or decide box(G) <= D");
  box_cmd->add_option("input", box_args.input, "Graph file, arrangement file or fixture")->required();
  box_cmd->add_option("--decide", box_args.decide, "Decide box(G) <= D");
  box_cmd->add_option("--budget", box_args.budget, "Node budget");

  bool quick = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the reference suite");
  verify_cmd->add_flag("--quick", quick, "Skip the n=9 exhaustion");

  std::size_t rho_r = 2;
  std::optional<std::size_t> rho_d;
  auto* rho_cmd = app.add_subcommand("rho", "Minimal agreement proportion over enumerated graphs");
  rho_cmd->add_option("--r", rho_r, "Clique number bound")->required();
  rho_cmd->add_option("--d", rho_d, "Boxicity bound; also checks 1/(2d)");

  std::string fixture_name;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List or dump fixtures");
  fixtures_cmd->require_subcommand(1);
  auto* list_cmd = fixtures_cmd->add_subcommand("list", "List fixture names");
  auto* dump_cmd = fixtures_cmd->add_subcommand("dump", "Print a fixture in file format");
  dump_cmd->add_option("name", fixture_name, "Fixture name, e.g. fig38a or \"k_partite 3\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_args);
    if (*bounds_cmd) return run_bounds(d_max);
    if (*eta_cmd) return run_search_eta(r_max, exhaust, workers);
    if (*box_cmd) return run_boxicity(box_args);
    if (*verify_cmd) return run_verify_paper(quick);
    if (*rho_cmd) return run_rho(rho_r, rho_d);
    if (*list_cmd) {
      for (const auto& f : fixture_catalog()) std::cout << f.name << "  " << f.description << "\n";
      return kOk;
    }
    if (*dump_cmd) {
      const auto fixture = load_fixture(fixture_name);
      if (const auto* arr = std::get_if<Arrangement>(&fixture)) {
        std::cout << serialize_arrangement(*arr);
      } else {
        std::cout << serialize_graph(std::get<Graph>(fixture));
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
