#include "agree/graph.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <set>

#include "agree/error.hpp"

namespace agree {

Graph::Graph(std::size_t order) : n_(order), rows_(order, 0) {
  if (order > kMaxVertices) {
    throw Error("graph order " + std::to_string(order) + " exceeds the 64-vertex cap");
  }
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw Error("edge endpoint out of range");
  if (u == v) throw Error("self-loop on vertex " + std::to_string(u + 1));
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : rows_) twice += set_size(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (VertexSet rest = rows_[u] & ~first_vertices(u + 1); rest != 0; rest &= rest - 1) {
      out.emplace_back(u, lowest_vertex(rest));
    }
  }
  return out;
}

bool Graph::is_complete() const {
  for (std::size_t v = 0; v < n_; ++v) {
    if (rows_[v] != (vertices() & ~bit(v))) return false;
  }
  return true;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<std::size_t> kept;
  for (VertexSet s = keep & g.vertices(); s != 0; s &= s - 1) kept.push_back(lowest_vertex(s));
  return relabel(g, kept);
}

Graph relabel(const Graph& g, std::span<const std::size_t> perm) {
  Graph h(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (g.adjacent(perm[i], perm[j])) h.add_edge(i, j);
  return h;
}

namespace {

// Greedy colouring bound branch-and-bound over bitsets.
void expand_clique(const Graph& g, VertexSet candidates, std::size_t depth, std::size_t& best) {
  std::array<std::size_t, kMaxVertices> order{};
  std::array<std::size_t, kMaxVertices> bound{};
  std::size_t count = 0;
  std::size_t color = 0;
  for (VertexSet uncolored = candidates; uncolored != 0;) {
    ++color;
    for (VertexSet q = uncolored; q != 0;) {
      const auto v = lowest_vertex(q);
      q &= ~bit(v) & ~g.neighbors(v);
      uncolored &= ~bit(v);
      order[count] = v;
      bound[count] = color;
      ++count;
    }
  }
  for (std::size_t i = count; i-- > 0;) {
    if (depth + bound[i] <= best) return;
    const auto v = order[i];
    const VertexSet next = candidates & g.neighbors(v);
    if (next == 0) {
      best = std::max(best, depth + 1);
    } else {
      expand_clique(g, next, depth + 1, best);
    }
    candidates &= ~bit(v);
  }
}

std::size_t count_cliques(const Graph& g, VertexSet candidates, std::size_t remaining) {
  if (remaining == 0) return 1;
  if (set_size(candidates) < remaining) return 0;
  std::size_t total = 0;
  for (VertexSet s = candidates; s != 0; s &= s - 1) {
    const auto v = lowest_vertex(s);
    total += count_cliques(g, g.neighbors(v) & (s & ~bit(v)), remaining - 1);
  }
  return total;
}

bool has_clique(const Graph& g, VertexSet candidates, std::size_t remaining) {
  if (remaining == 0) return true;
  if (set_size(candidates) < remaining) return false;
  for (VertexSet s = candidates; s != 0; s &= s - 1) {
    const auto v = lowest_vertex(s);
    if (has_clique(g, g.neighbors(v) & (s & ~bit(v)), remaining - 1)) return true;
  }
  return false;
}

void visit_cliques(const Graph& g, VertexSet clique, VertexSet candidates, std::size_t room,
                   const std::function<void(VertexSet)>& visit) {
  visit(clique);
  if (room == 0) return;
  for (VertexSet s = candidates; s != 0; s &= s - 1) {
    const auto v = lowest_vertex(s);
    visit_cliques(g, clique | bit(v), g.neighbors(v) & (s & ~bit(v)), room - 1, visit);
  }
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  const VertexSet px = p | x;
  std::size_t pivot = lowest_vertex(px);
  std::size_t best = 0;
  for (VertexSet s = px; s != 0; s &= s - 1) {
    const auto u = lowest_vertex(s);
    const auto covered = set_size(p & g.neighbors(u));
    if (covered >= best) {
      best = covered;
      pivot = u;
    }
  }
  for (VertexSet s = p & ~g.neighbors(pivot); s != 0; s &= s - 1) {
    const auto v = lowest_vertex(s);
    bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

// Calls visit(mask) for every m-subset of the first n vertices until visit
// returns false.
bool for_each_subset(std::size_t n, std::size_t m, VertexSet chosen, std::size_t from,
                     const std::function<bool(VertexSet)>& visit) {
  if (m == 0) return visit(chosen);
  for (std::size_t v = from; v + m <= n; ++v) {
    if (!for_each_subset(n, m - 1, chosen | bit(v), v + 1, visit)) return false;
  }
  return true;
}

}  // namespace

std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  if (g.order() > 0) expand_clique(g, g.vertices(), 0, best);
  return best;
}

std::size_t count_cliques_of_size(const Graph& g, std::size_t size) {
  if (size < 1 || size > g.order()) throw Error("clique size must lie in 1..n");
  return count_cliques(g, g.vertices(), size);
}

void for_each_clique(const Graph& g, VertexSet within, std::size_t max_size,
                     const std::function<void(VertexSet)>& visit) {
  visit_cliques(g, 0, within & g.vertices(), max_size, visit);
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  bron_kerbosch(g, 0, g.vertices(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_agreeable(const Graph& g, std::size_t k, std::size_t m) {
  if (k < 2 || k > m) throw Error("agreeability needs 2 <= k <= m");
  const auto n = g.order();
  if (m > n) return true;
  const bool direct = for_each_subset(n, m, 0, 0, [&](VertexSet subset) {
    return has_clique(g, subset, k);
  });
  if (k == 2 && m == 3) {
    const bool via_complement = clique_number(complement(g)) <= 2;
    if (direct != via_complement) {
      throw Error("internal: (2,3)-agreeability routes disagree");
    }
  }
  return direct;
}

bool has_universal_vertex(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) return true;
  return false;
}

StrippedGraph strip_universal(const Graph& g) {
  if (g.is_complete()) throw Error("strip_universal is undefined on a complete graph");
  VertexSet keep = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 != g.order()) keep |= bit(v);
  return {induced_subgraph(g, keep), g.order() - set_size(keep)};
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search, then a perfect elimination check.
  const auto n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<std::size_t> position(n, 0);
  std::vector<std::size_t> visit_order;
  VertexSet visited = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (VertexSet s = g.vertices() & ~visited; s != 0; s &= s - 1) {
      const auto v = lowest_vertex(s);
      if (pick == n || weight[v] > weight[pick]) pick = v;
    }
    visited |= bit(pick);
    position[pick] = step;
    visit_order.push_back(pick);
    for (VertexSet s = g.neighbors(pick) & ~visited; s != 0; s &= s - 1) ++weight[lowest_vertex(s)];
  }
  VertexSet seen = 0;
  for (const auto v : visit_order) {
    const VertexSet earlier = g.neighbors(v) & seen;
    if (earlier != 0) {
      std::size_t parent = lowest_vertex(earlier);
      for (VertexSet s = earlier; s != 0; s &= s - 1) {
        const auto u = lowest_vertex(s);
        if (position[u] > position[parent]) parent = u;
      }
      const VertexSet rest = earlier & ~bit(parent);
      if ((rest & ~(g.neighbors(parent) & seen)) != 0) return false;
    }
    seen |= bit(v);
  }
  return true;
}

namespace {

struct CliqueOrderSearch {
  const std::vector<VertexSet>& cliques;
  std::vector<std::size_t> remaining;  // unplaced cliques containing each vertex
  std::set<std::pair<std::uint64_t, std::size_t>> dead;

  bool extend(std::uint64_t placed, std::size_t last, VertexSet closed) {
    if (placed == first_vertices(cliques.size())) return true;
    const std::pair k{placed, last};
    if (dead.contains(k)) return false;
    const VertexSet open = cliques[last];
    VertexSet must = 0;
    for (VertexSet s = open; s != 0; s &= s - 1) {
      const auto v = lowest_vertex(s);
      if (remaining[v] > 0) must |= bit(v);
    }
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      if ((placed >> c) & 1U) continue;
      const VertexSet q = cliques[c];
      if ((q & closed) != 0 || (must & ~q) != 0) continue;
      for (VertexSet s = q; s != 0; s &= s - 1) --remaining[lowest_vertex(s)];
      const bool ok = extend(placed | (std::uint64_t{1} << c), c, closed | (open & ~q));
      for (VertexSet s = q; s != 0; s &= s - 1) ++remaining[lowest_vertex(s)];
      if (ok) return true;
    }
    dead.insert(k);
    return false;
  }
};

}  // namespace

bool is_interval_graph(const Graph& g) {
  if (g.order() <= 3) return true;
  // Interval graphs are chordal, and chordal graphs have at most n maximal
  // cliques, which keeps the placed-set mask in one word.
  if (!is_chordal(g)) return false;
  const auto cliques = maximal_cliques(g);
  CliqueOrderSearch search{cliques, std::vector<std::size_t>(g.order(), 0), {}};
  for (const auto q : cliques)
    for (VertexSet s = q; s != 0; s &= s - 1) ++search.remaining[lowest_vertex(s)];
  for (std::size_t first = 0; first < cliques.size(); ++first) {
    for (VertexSet s = cliques[first]; s != 0; s &= s - 1) --search.remaining[lowest_vertex(s)];
    const bool ok = search.extend(std::uint64_t{1} << first, first, 0);
    for (VertexSet s = cliques[first]; s != 0; s &= s - 1) ++search.remaining[lowest_vertex(s)];
    if (ok) return true;
  }
  return false;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile profile;
  for (std::size_t v = 0; v < g.order(); ++v) profile.degrees.push_back(g.degree(v));
  std::sort(profile.degrees.begin(), profile.degrees.end());
  if (!profile.degrees.empty()) {
    profile.min_degree = profile.degrees.front();
    profile.max_degree = profile.degrees.back();
  }
  return profile;
}

namespace {

using Cell = std::vector<std::size_t>;
using Partition = std::vector<Cell>;

VertexSet cell_mask(const Cell& cell) {
  VertexSet m = 0;
  for (auto v : cell) m |= bit(v);
  return m;
}

// Refines to the coarsest equitable partition below `cells`. Splits order
// sub-cells by ascending neighbour count, so the result is label-invariant.
void refine(const Graph& g, Partition& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = cell_mask(cells[s]);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() == 1) continue;
        std::vector<std::pair<std::size_t, std::size_t>> keyed;
        for (auto v : cells[c]) keyed.emplace_back(set_size(g.neighbors(v) & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (keyed.front().first == keyed.back().first) continue;
        Partition pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

Certificate leaf_certificate(const Graph& g, const std::vector<std::size_t>& labeling) {
  Certificate cert;
  cert.reserve(labeling.size() + 1);
  cert.push_back(labeling.size());
  std::vector<std::size_t> position(g.order());
  for (std::size_t i = 0; i < labeling.size(); ++i) position[labeling[i]] = i;
  for (auto v : labeling) {
    VertexSet row = 0;
    for (VertexSet s = g.neighbors(v); s != 0; s &= s - 1) row |= bit(position[lowest_vertex(s)]);
    cert.push_back(row);
  }
  return cert;
}

void search_leaves(const Graph& g, Partition cells, CanonicalForm& best, bool& have) {
  refine(g, cells);
  std::size_t target = cells.size();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) {
      target = c;
    }
  }
  if (target == cells.size()) {
    std::vector<std::size_t> labeling;
    for (const auto& cell : cells) labeling.push_back(cell.front());
    auto cert = leaf_certificate(g, labeling);
    if (!have || cert < best.certificate) {
      best.certificate = std::move(cert);
      best.labeling = std::move(labeling);
      have = true;
    }
    return;
  }
  for (auto v : cells[target]) {
    Partition next = cells;
    Cell rest;
    for (auto u : cells[target])
      if (u != v) rest.push_back(u);
    next[target] = Cell{v};
    next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
    search_leaves(g, std::move(next), best, have);
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm best;
  if (g.order() == 0) {
    best.certificate = {0};
    return best;
  }
  Cell all;
  for (std::size_t v = 0; v < g.order(); ++v) all.push_back(v);
  bool have = false;
  search_leaves(g, Partition{all}, best, have);
  return best;
}

}  // namespace agree
