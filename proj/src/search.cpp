#include "agree/search.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "agree/bounds.hpp"
#include "agree/error.hpp"
#include "agree/fixtures.hpp"

namespace agree {

std::string to_string(ExclusionRule rule) {
  switch (rule) {
    case ExclusionRule::degree_gap:
      return "degree-gap";
    case ExclusionRule::parity:
      return "parity";
    case ExclusionRule::exhaustion:
      return "exhaustion";
  }
  return "unknown";
}

void EtaTable::set(EtaEntry entry) { entries_[entry.r] = std::move(entry); }

const EtaEntry* EtaTable::find(std::size_t r) const {
  const auto it = entries_.find(r);
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t EtaTable::vertex_bound(std::size_t r) const {
  if (r == 0) return 0;
  const auto* entry = find(r);
  if (entry == nullptr) throw Error("eta(" + std::to_string(r) + ") is not in the table");
  return entry->confirmed.value_or(entry->upper_bound);
}

std::size_t EtaTable::confirmed(std::size_t r) const {
  if (r == 0) return 0;
  const auto* entry = find(r);
  if (entry == nullptr || !entry->confirmed) {
    throw Error("eta(" + std::to_string(r) + ") is not confirmed in the table");
  }
  return *entry->confirmed;
}

std::size_t EtaTable::dimension_bound(std::size_t r, std::size_t d) const {
  if (d == 0) return r;
  if (d == 1) return 2 * r;
  if (r == 0) return 0;
  if (find(r) == nullptr) {
    throw Error("eta(" + std::to_string(r) + ", " + std::to_string(d) +
                ") is unavailable: the table has no eta(" + std::to_string(r) + ")");
  }
  return vertex_bound(r);
}

EtaTable EtaTable::standard() {
  EtaTable table;
  for (std::size_t r = 1; r <= 4; ++r) table.set(confirm_eta(r, table));
  const auto five = eta_upper(5, table);
  table.set(EtaEntry{5, std::nullopt, five.bound, std::nullopt, five.certificate});
  return table;
}

namespace {

struct Level {
  std::map<Certificate, Graph> graphs;
  PruneStats stats;
};

Graph extend(const Graph& parent, VertexSet neighbours) {
  const auto k = parent.order();
  Graph child(k + 1);
  for (const auto& [u, v] : parent.edges()) child.add_edge(u, v);
  for (VertexSet s = neighbours; s != 0; s &= s - 1) child.add_edge(lowest_vertex(s), k);
  return child;
}

void extend_parent(const Graph& parent, std::size_t r, std::size_t max_degree,
                   std::size_t final_order, Level& out) {
  const auto all = parent.vertices();
  const auto child_order = parent.order() + 1;
  for_each_clique(parent, all, r, [&](VertexSet non_neighbours) {
    ++out.stats.candidates;
    const VertexSet neighbours = all & ~non_neighbours;
    bool degree_ok = set_size(neighbours) <= max_degree;
    for (VertexSet s = neighbours; degree_ok && s != 0; s &= s - 1) {
      degree_ok = parent.degree(lowest_vertex(s)) + 1 <= max_degree;
    }
    if (!degree_ok) {
      ++out.stats.degree_cuts;
      return;
    }
    if (clique_number(induced_subgraph(parent, neighbours)) >= r) {
      ++out.stats.clique_cuts;
      return;
    }
    auto child = extend(parent, neighbours);
    if (child_order == final_order && child_order > r + 1) {
      // Every vertex is final now: deg(v) >= n - omega - 1 >= n - r - 1.
      if (degree_profile(child).min_degree < child_order - r - 1) {
        ++out.stats.degree_cuts;
        return;
      }
    }
    // The canonical relabeling is stored so the representative does not
    // depend on which parent reached it first.
    auto form = canonical_form(child);
    if (out.graphs.contains(form.certificate)) {
      ++out.stats.duplicates;
      return;
    }
    out.graphs.emplace(std::move(form.certificate), relabel(child, form.labeling));
  });
}

Level next_level(const std::vector<Graph>& parents, std::size_t r, std::size_t max_degree,
                 std::size_t final_order, unsigned workers) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(parents.size())));
  std::vector<Level> partial(workers);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < parents.size(); i += workers) {
      extend_parent(parents[i], r, max_degree, final_order, partial[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  Level merged = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w) {
    merged.stats.candidates += partial[w].stats.candidates;
    merged.stats.clique_cuts += partial[w].stats.clique_cuts;
    merged.stats.degree_cuts += partial[w].stats.degree_cuts;
    merged.stats.duplicates += partial[w].stats.duplicates;
    for (auto& [cert, g] : partial[w].graphs) {
      if (!merged.graphs.emplace(cert, std::move(g)).second) ++merged.stats.duplicates;
    }
  }
  return merged;
}

void validate_survivors(const SearchCertificate& cert) {
  for (const auto& g : cert.survivors) {
    if (g.order() != cert.order || !is_agreeable(g, 2, 3) || clique_number(g) > cert.r) {
      throw Error("internal: enumeration produced a graph outside the class");
    }
  }
}

}  // namespace

std::vector<SearchCertificate> enumerate_agreeable_levels(std::size_t r, std::size_t max_order,
                                                          const EtaTable& table,
                                                          unsigned workers) {
  if (r < 1) throw Error("enumeration needs r >= 1");
  const auto max_degree = table.vertex_bound(r - 1);
  std::vector<SearchCertificate> levels;
  if (max_order == 0) return levels;

  SearchCertificate first;
  first.order = 1;
  first.r = r;
  first.survivors.push_back(Graph(1));
  levels.push_back(first);
  while (levels.back().order < max_order && !levels.back().survivors.empty()) {
    const auto& parents = levels.back().survivors;
    auto level = next_level(parents, r, max_degree, levels.back().order + 1, workers);
    SearchCertificate cert;
    cert.order = levels.back().order + 1;
    cert.r = r;
    cert.stats = level.stats;
    cert.graphs_examined = level.stats.candidates;
    for (auto& [key, g] : level.graphs) cert.survivors.push_back(std::move(g));
    validate_survivors(cert);
    levels.push_back(std::move(cert));
  }
  return levels;
}

SearchCertificate enumerate_agreeable(std::size_t n, std::size_t r, const EtaTable& table,
                                      unsigned workers) {
  if (n < 1) throw Error("enumeration needs n >= 1");
  auto levels = enumerate_agreeable_levels(r, n, table, workers);
  SearchCertificate out = std::move(levels.back());
  if (out.order != n) {
    // A smaller order was already empty, so order n is too.
    SearchCertificate empty;
    empty.order = n;
    empty.r = r;
    empty.stats = out.stats;
    empty.graphs_examined = out.graphs_examined;
    return empty;
  }
  return out;
}

EtaUpper eta_upper(std::size_t r, const EtaTable& table) {
  if (r < 1) throw Error("eta_upper needs r >= 1");
  const auto previous = table.confirmed(r - 1);
  const auto largest = previous + r + 1;  // one more vertex forces min degree > max degree
  EtaUpper out;
  if ((largest * previous) % 2 == 1) {
    out.bound = largest - 1;
    out.certificate = {ExclusionRule::parity, largest,
                       "n=" + std::to_string(largest) + " forces a " + std::to_string(previous) +
                           "-regular graph on an odd number of vertices"};
  } else {
    out.bound = largest;
    out.certificate = {ExclusionRule::degree_gap, largest + 1,
                       "n=" + std::to_string(largest + 1) + " needs min degree " +
                           std::to_string(largest - r) + " > eta(" + std::to_string(r - 1) +
                           ")=" + std::to_string(previous)};
  }
  return out;
}

std::optional<Graph> registered_eta_witness(std::size_t r) {
  switch (r) {
    case 1:
      return empty_graph(2);
    case 2:
      return cycle_graph(5);
    case 3:
      return fixtures::fig38a_graph();
    case 4:
      return fixtures::fig134_graph();
    default:
      return std::nullopt;
  }
}

EtaEntry confirm_eta(std::size_t r, const EtaTable& table) {
  if (r < 1 || r > 4) throw Error("confirm_eta is limited to r = 1..4");
  const auto upper = eta_upper(r, table);
  auto witness = registered_eta_witness(r);
  if (!witness || !is_agreeable(*witness, 2, 3) || clique_number(*witness) > r) {
    throw Error("registered witness for eta(" + std::to_string(r) + ") failed validation");
  }
  EtaEntry entry;
  entry.r = r;
  entry.upper_bound = upper.bound;
  entry.impossibility = upper.certificate;
  if (witness->order() == upper.bound) entry.confirmed = upper.bound;
  entry.witness = std::move(witness);
  return entry;
}

EtaCertificate exhaustion_certificate(std::size_t r, const EtaTable& table) {
  const auto n = eta_upper(r, table).bound + 1;
  const auto cert = enumerate_agreeable(n, r, table);
  if (!cert.survivors.empty()) {
    throw Error("found a graph of order " + std::to_string(n) + " with clique number <= " +
                std::to_string(r));
  }
  return {ExclusionRule::exhaustion, n,
          "no graph of order " + std::to_string(n) + " after examining " +
              std::to_string(cert.graphs_examined) + " extensions"};
}

namespace {

enum class Inclusion { in, out, undecided };

Inclusion boxicity_at_most(const Graph& g, std::size_t d, std::uint64_t budget,
                           std::size_t& searches) {
  if (g.is_complete() || roberts_upper_bound(g) <= d) return Inclusion::in;
  const bool interval = is_interval_graph(g);
  if (interval) return Inclusion::in;
  if (d == 1) return Inclusion::out;
  if (adiga_lower_bound(strip_universal(g).graph) > d) return Inclusion::out;
  ++searches;
  switch (decide_boxicity_leq(g, d, budget).verdict) {
    case Verdict::yes:
      return Inclusion::in;
    case Verdict::no:
      return Inclusion::out;
    case Verdict::inconclusive:
      return Inclusion::undecided;
  }
  return Inclusion::undecided;
}

}  // namespace

ProportionResult min_agreement_proportion(std::size_t r, std::optional<std::size_t> d,
                                          const EtaTable& table, std::uint64_t budget) {
  if (r < 1 || r > 4) throw Error("minimal agreement proportion is limited to r = 1..4");
  const auto max_order = table.vertex_bound(r);
  if (d) {
    if (*d < 1) throw Error("boxicity constraint needs d >= 1");
    if (r >= 4 && *d < max_order / 2) {
      throw Error("boxicity-constrained minimum for r >= 4 is beyond desk scale");
    }
  }
  struct Candidate {
    Rational proportion;
    const Graph* graph;
  };
  const auto levels = enumerate_agreeable_levels(r, max_order, table);
  std::vector<Candidate> candidates;
  for (const auto& level : levels) {
    for (const auto& g : level.survivors) {
      candidates.push_back({Rational(static_cast<std::int64_t>(clique_number(g)),
                                     static_cast<std::int64_t>(g.order())),
                            &g});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.proportion < b.proportion; });

  ProportionResult result;
  std::optional<Rational> best;
  std::vector<std::string> undecided;
  for (const auto& [proportion, graph] : candidates) {
    if (best && proportion > *best) break;
    ++result.graphs_considered;
    if (d) {
      const auto inclusion = boxicity_at_most(*graph, *d, budget, result.boxicity_searches);
      if (inclusion == Inclusion::out) continue;
      if (inclusion == Inclusion::undecided) {
        std::string edges;
        for (const auto& [u, v] : graph->edges()) {
          edges += " " + std::to_string(u + 1) + "-" + std::to_string(v + 1);
        }
        undecided.push_back("n=" + std::to_string(graph->order()) + ":" + edges);
        continue;
      }
    }
    if (!best || proportion < *best) {
      best = proportion;
      result.minimizers.clear();
    }
    result.minimizers.push_back(*graph);
  }
  if (!undecided.empty()) {
    std::string message = "boxicity undecided within budget for:";
    for (const auto& u : undecided) message += "\n  " + u;
    throw Error(message);
  }
  if (!best) throw Error("no graph satisfies the constraints");
  result.minimum = *best;
  return result;
}

MainTheoremCheck verify_main_theorem(std::size_t d, std::size_t r, const EtaTable& table,
                                     std::uint64_t budget) {
  MainTheoremCheck check;
  check.bound = main_lower_bound(d);
  const auto result = min_agreement_proportion(r, d, table, budget);
  check.minimum = result.minimum;
  if (result.minimum < check.bound) {
    check.failures.push_back("minimum " + to_string(result.minimum) + " is below " +
                             to_string(check.bound));
  }
  for (const auto& g : result.minimizers) {
    const auto n = g.order();
    const auto omega = clique_number(g);
    const auto delta = degree_profile(g).min_degree;
    const std::string tag = "minimizer on " + std::to_string(n) + " vertices: ";
    if (g.is_complete()) continue;
    if (has_universal_vertex(g)) check.failures.push_back(tag + "has a universal vertex");
    const auto gap = n - delta - 1;
    if (Rational(static_cast<std::int64_t>(d)) <
        Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(2 * gap))) {
      check.failures.push_back(tag + "d < n/(2(n - delta - 1))");
    }
    if (omega < gap) check.failures.push_back(tag + "omega < n - delta - 1");
  }
  check.holds = check.failures.empty();
  return check;
}

}  // namespace agree
