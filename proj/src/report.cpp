#include "agree/report.hpp"

#include <json.hpp>
#include <sstream>

namespace agree {
namespace {

using json = nlohmann::ordered_json;

json optional_size(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json boxicity_json(const BoxicityReport& b) {
  return json{{"lower", b.lower},
              {"upper", b.upper},
              {"exact", optional_size(b.exact)},
              {"interval", b.interval},
              {"stripped_universal", b.stripped_universal},
              {"adiga_on_stripped", b.adiga_on_stripped},
              {"budget_exhausted", b.budget_exhausted},
              {"nodes", b.nodes},
              {"witness", b.witness ? json::parse(serialize_arrangement(*b.witness)) : json(nullptr)}};
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (const auto x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Analysis analyze(const Input& input, const AnalyzeOptions& options) {
  Analysis a;
  if (const auto* arr = std::get_if<Arrangement>(&input)) {
    a.kind = "arrangement";
    a.dimension = arr->dimension();
    a.graph = intersection_graph(*arr);
    a.agreement_number = agreement_number(*arr);
    a.f_vector = f_vector(*arr);
  } else {
    a.kind = "graph";
    a.graph = std::get<Graph>(input);
  }
  const auto n = a.graph.order();
  a.clique_number = clique_number(a.graph);
  // Helly: for boxes the agreement number is the clique number.
  const auto agreement = a.agreement_number.value_or(a.clique_number);
  a.proportion = Rational(static_cast<std::int64_t>(agreement), static_cast<std::int64_t>(n));
  a.agreeable = is_agreeable(a.graph, 2, 3);
  a.degrees = degree_profile(a.graph);
  a.triangles = n >= 3 ? count_cliques_of_size(a.graph, 3) : 0;
  if (options.boxicity) a.boxicity = boxicity_report(a.graph, options.boxicity_budget);
  return a;
}

std::string render_json(const Analysis& a) {
  json edges = json::array();
  for (const auto& [u, v] : a.graph.edges()) edges.push_back({u + 1, v + 1});
  json doc = json::object();
  doc["kind"] = a.kind;
  doc["dimension"] = optional_size(a.dimension);
  doc["vertices"] = a.graph.order();
  doc["edges"] = a.graph.edge_count();
  doc["edge_list"] = std::move(edges);
  doc["clique_number"] = a.clique_number;
  doc["agreement_number"] = optional_size(a.agreement_number);
  doc["proportion"] = to_string(a.proportion);
  doc["agreeable"] = a.agreeable;
  doc["min_degree"] = a.degrees.min_degree;
  doc["max_degree"] = a.degrees.max_degree;
  doc["degrees"] = a.degrees.degrees;
  doc["triangles"] = a.triangles;
  doc["f_vector"] = a.f_vector ? json(a.f_vector->entries) : json(nullptr);
  doc["boxicity"] = a.boxicity ? boxicity_json(*a.boxicity) : json(nullptr);
  return doc.dump(2) + "\n";
}

std::string render_text(const Analysis& a) {
  std::ostringstream out;
  out << "kind: " << a.kind << "\n";
  if (a.dimension) out << "dimension: " << *a.dimension << "\n";
  out << "vertices: " << a.graph.order() << "\n";
  out << "edges: " << a.graph.edge_count() << "\n";
  out << "edge list:";
  for (const auto& [u, v] : a.graph.edges()) out << " " << u + 1 << "-" << v + 1;
  out << "\n";
  out << "clique number: " << a.clique_number << "\n";
  if (a.agreement_number) out << "agreement number: " << *a.agreement_number << "\n";
  out << "agreement proportion: " << to_string(a.proportion) << "\n";
  out << "agreeable (2,3): " << (a.agreeable ? "yes" : "no") << "\n";
  out << "degrees: min " << a.degrees.min_degree << ", max " << a.degrees.max_degree << " ["
      << join(a.degrees.degrees) << "]\n";
  out << "triangles: " << a.triangles << "\n";
  if (a.f_vector) {
    out << "f-vector:";
    for (const auto f : a.f_vector->entries) out << " " << f;
    out << "\n";
  }
  if (a.boxicity) {
    const auto& b = *a.boxicity;
    out << "boxicity: ";
    if (b.exact) {
      out << *b.exact;
    } else {
      out << b.lower << ".." << b.upper << (b.budget_exhausted ? " (budget exhausted)" : "");
    }
    out << "\n  interval: " << (b.interval ? "yes" : "no") << "\n  roberts upper: " << b.upper
        << "\n  adiga lower (after stripping " << b.stripped_universal
        << " universal): " << b.adiga_on_stripped << "\n  search nodes: " << b.nodes << "\n";
    if (b.witness) out << "  witness: " << serialize_arrangement(*b.witness);
  }
  return out.str();
}

}  // namespace agree
