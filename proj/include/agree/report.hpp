#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "agree/boxicity.hpp"
#include "agree/geometry.hpp"
#include "agree/graph.hpp"
#include "agree/io.hpp"
#include "agree/rational.hpp"

namespace agree {

struct AnalyzeOptions {
  bool boxicity = false;
  std::uint64_t boxicity_budget = kDefaultNodeBudget;
};

struct Analysis {
  std::string kind;  // "arrangement" or "graph"
  std::optional<std::size_t> dimension;
  Graph graph{1};
  std::size_t clique_number = 0;
  std::optional<std::size_t> agreement_number;  // arrangements: measured on the boxes
  Rational proportion;
  bool agreeable = false;
  DegreeProfile degrees;
  std::size_t triangles = 0;
  std::optional<FVector> f_vector;
  std::optional<BoxicityReport> boxicity;
};

Analysis analyze(const Input& input, const AnalyzeOptions& options = {});

/// Keys, in order: kind, dimension (arrangements), vertices, edges,
/// edge_list, clique_number, agreement_number (arrangements), proportion,
/// agreeable, min_degree, max_degree, degrees, triangles, f_vector
/// (arrangements), boxicity (on request: lower, upper, exact, interval,
/// stripped_universal, adiga_on_stripped, budget_exhausted, nodes, witness).
/// Absent values are null, never omitted.
std::string render_json(const Analysis& a);
std::string render_text(const Analysis& a);

std::string verdict_name(Verdict v);

}  // namespace agree
