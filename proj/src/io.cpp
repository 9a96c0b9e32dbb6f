#include "agree/io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "agree/error.hpp"
#include "agree/fixtures.hpp"

namespace agree {
namespace {

using json = nlohmann::json;

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

Rational coordinate(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
  }
  throw Error(where + ": coordinate must be an integer or a \"p/q\" string");
}

json coordinate_json(const Rational& x) {
  if (x.denominator() == 1) return x.numerator();
  return to_string(x);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::size_t> parse_count(std::string_view word) {
  std::size_t value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

Arrangement parse_arrangement(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                ": invalid JSON");
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("boxes")) {
    throw Error("arrangement must be an object with \"dimension\" and \"boxes\"");
  }
  if (!doc["dimension"].is_number_integer() || doc["dimension"].get<std::int64_t>() < 1) {
    throw Error("\"dimension\" must be a positive integer");
  }
  const auto d = doc["dimension"].get<std::size_t>();
  if (!doc["boxes"].is_array() || doc["boxes"].empty()) throw Error("\"boxes\" must be a non-empty array");
  std::vector<Box> boxes;
  std::size_t index = 0;
  for (const auto& entry : doc["boxes"]) {
    ++index;
    const auto where = "box " + std::to_string(index);
    if (!entry.is_array()) throw Error(where + ": expected a list of [lo, hi] pairs");
    if (entry.size() != d) {
      throw Error(where + ": has " + std::to_string(entry.size()) + " sides, dimension is " +
                  std::to_string(d));
    }
    std::vector<Interval> sides;
    std::size_t axis = 0;
    for (const auto& pair : entry) {
      ++axis;
      const auto at = where + ", axis " + std::to_string(axis);
      if (!pair.is_array() || pair.size() != 2) throw Error(at + ": expected [lo, hi]");
      const auto lo = coordinate(pair[0], at);
      const auto hi = coordinate(pair[1], at);
      if (hi < lo) throw Error(at + ": hi < lo");
      sides.emplace_back(lo, hi);
    }
    boxes.emplace_back(std::move(sides));
  }
  return Arrangement(d, std::move(boxes));
}

std::string serialize_arrangement(const Arrangement& arr) {
  json boxes = json::array();
  for (const auto& box : arr.boxes()) {
    json sides = json::array();
    for (const auto& side : box.sides()) sides.push_back({coordinate_json(side.lo()), coordinate_json(side.hi())});
    boxes.push_back(std::move(sides));
  }
  nlohmann::ordered_json doc;
  doc["dimension"] = arr.dimension();
  doc["boxes"] = std::move(boxes);
  return doc.dump() + "\n";
}

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto where = "line " + std::to_string(line_no);
    const auto w = words(line);
    if (!g) {
      if (w.size() != 2 || w[0] != "n") throw Error(where + ": expected header \"n <count>\"");
      const auto n = parse_count(w[1]);
      if (!n || *n < 1 || *n > 64) throw Error(where + ": vertex count must be in 1..64");
      g.emplace(*n);
      continue;
    }
    if (w.size() != 2) throw Error(where + ": expected \"u v\"");
    const auto u = parse_count(w[0]);
    const auto v = parse_count(w[1]);
    if (!u || !v) throw Error(where + ": vertices must be integers");
    if (!(1 <= *u && *u < *v && *v <= g->order())) {
      throw Error(where + ": need 1 <= u < v <= " + std::to_string(g->order()));
    }
    if (!seen.emplace(*u, *v).second) throw Error(where + ": duplicate edge");
    g->add_edge(*u - 1, *v - 1);
  }
  if (!g) throw Error("missing header \"n <count>\"");
  return *g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Input parse_input(std::string_view text) {
  const auto body = trim(text);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && body[first] == '{') return parse_arrangement(text);
  return parse_graph(text);
}

std::vector<FixtureInfo> fixture_catalog() {
  return {
      {"z5", "five 2-boxes realizing the 5-cycle", false},
      {"fig38a", "eight 2-boxes, 4-regular, 16 edges, omega 3", false},
      {"fig38b", "eight 2-boxes, 17 edges, max degree 5, omega 3", false},
      {"fig38c", "fig38a graph plus {1,2} and {6,7} (graph only)", false},
      {"fig134", "8-regular graph on 13 vertices, omega 4 (graph only)", false},
      {"w4", "wheel with four spokes, hub 5 (graph only)", false},
      {"exposure", "six 2-boxes A..F with an exposed box", false},
      {"k_partite <d>", "d-boxes realizing K_d(2)", true},
      {"two_clusters <r>", "r copies of [0,1] and r of [2,3]", true},
  };
}

namespace {

std::string catalog_list() {
  std::string out;
  for (const auto& f : fixture_catalog()) out += (out.empty() ? "" : ", ") + f.name;
  return out;
}

// Splits "k_partite 3" or "k_partite_3" into base name and parameter.
std::pair<std::string, std::optional<std::size_t>> split_name(std::string_view name) {
  name = trim(name);
  auto cut = name.find_last_of(" _");
  if (cut != std::string_view::npos) {
    if (const auto p = parse_count(trim(name.substr(cut + 1)))) {
      return {std::string(trim(name.substr(0, cut))), p};
    }
  }
  return {std::string(name), std::nullopt};
}

}  // namespace

Input load_fixture(std::string_view name) {
  const auto [base, param] = split_name(name);
  const auto unknown = [&] {
    return Error("unknown fixture \"" + std::string(name) + "\"; available: " + catalog_list());
  };
  if (param) {
    if (base == "k_partite") {
      if (*param < 1 || *param > 32) throw Error("k_partite needs 1 <= d <= 32");
      return fixtures::complete_multipartite_pairs_boxes(*param);
    }
    if (base == "two_clusters") {
      if (*param < 1 || *param > 32) throw Error("two_clusters needs 1 <= r <= 32");
      return fixtures::two_clusters(*param);
    }
    throw unknown();
  }
  if (base == "z5") return fixtures::z5();
  if (base == "fig38a") return fixtures::fig38a();
  if (base == "fig38b") return fixtures::fig38b();
  if (base == "fig38c") return fixtures::fig38c_graph();
  if (base == "fig134") return fixtures::fig134_graph();
  if (base == "w4") return fixtures::wheel4();
  if (base == "exposure") return fixtures::exposure_example();
  if (base == "k_partite" || base == "two_clusters") throw Error(base + " needs a parameter, e.g. \"" + base + " 3\"");
  throw unknown();
}

std::optional<Graph> fixture_expected_graph(std::string_view name) {
  const auto [base, param] = split_name(name);
  if (param && base == "k_partite") return fixtures::complete_multipartite_pairs(*param);
  if (param && base == "two_clusters") {
    return disjoint_union(complete_graph(*param), complete_graph(*param));
  }
  if (param) return std::nullopt;
  if (base == "z5") return cycle_graph(5);
  if (base == "fig38a") return fixtures::fig38a_graph();
  if (base == "fig38b") return fixtures::fig38b_graph();
  return std::nullopt;
}

Input load_input(const std::string& path_or_fixture) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(path_or_fixture, ec)) {
    const auto text = read_file(path_or_fixture);
    try {
      return parse_input(text);
    } catch (const Error& e) {
      throw Error(path_or_fixture + ": " + e.what());
    }
  }
  return load_fixture(path_or_fixture);
}

}  // namespace agree
