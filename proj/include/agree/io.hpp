#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "agree/geometry.hpp"
#include "agree/graph.hpp"

namespace agree {

// Arrangement files are JSON:
//   {"dimension": 2, "boxes": [[["1", "4"], [0, 5]], ...]}
// one [lo, hi] pair per axis; coordinates are "p/q" strings or integers.
Arrangement parse_arrangement(std::string_view text);
std::string serialize_arrangement(const Arrangement& arr);

// Graph files: "n <count>" then one "u v" edge per line, 1-based, u < v.
// Blank lines and lines starting with '#' are skipped.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

std::string read_file(const std::string& path);

using Input = std::variant<Arrangement, Graph>;

/// Arrangement when the text starts with '{', graph file otherwise.
Input parse_input(std::string_view text);

struct FixtureInfo {
  std::string name;
  std::string description;
  bool parametric = false;
};

std::vector<FixtureInfo> fixture_catalog();

/// "z5", "fig38a", "fig38b", "fig38c", "fig134", "w4", "exposure",
/// "k_partite <d>", "two_clusters <r>" (an underscore-joined parameter,
/// e.g. "k_partite_3", also works). Throws listing the catalog otherwise.
Input load_fixture(std::string_view name);

/// Edge list an arrangement fixture must realize, if one is registered.
std::optional<Graph> fixture_expected_graph(std::string_view name);

/// A readable file path, else a fixture name.
Input load_input(const std::string& path_or_fixture);

}  // namespace agree
