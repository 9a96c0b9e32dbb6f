#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace agree {

/// Vertex subset of a Graph, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

constexpr VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

constexpr VertexSet first_vertices(std::size_t n) {
  return n >= kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
}

constexpr std::size_t set_size(VertexSet s) { return static_cast<std::size_t>(std::popcount(s)); }

constexpr std::size_t lowest_vertex(VertexSet s) {
  return static_cast<std::size_t>(std::countr_zero(s));
}

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64), one adjacency word
/// per vertex. Text formats and reports number vertices from 1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  /// Edges are 0-based pairs; self-loops and out-of-range endpoints throw.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  VertexSet vertices() const { return first_vertices(n_); }

  bool adjacent(std::size_t u, std::size_t v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return set_size(rows_[v]); }

  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::size_t edge_count() const;
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  bool is_complete() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> rows_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complement(const Graph& g);

/// Subgraph induced by `keep`, relabelled in increasing vertex order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Graph whose vertex i is vertex perm[i] of g.
Graph relabel(const Graph& g, std::span<const std::size_t> perm);

std::size_t clique_number(const Graph& g);

std::size_t count_cliques_of_size(const Graph& g, std::size_t size);

/// Calls visit(clique) for every clique (including the empty one) inside
/// `within` with at most max_size vertices.
void for_each_clique(const Graph& g, VertexSet within, std::size_t max_size,
                     const std::function<void(VertexSet)>& visit);

std::vector<VertexSet> maximal_cliques(const Graph& g);

/// True iff every m-subset of vertices contains a k-clique (vacuously true
/// when m > n). For (2,3) the answer is cross-checked against
/// clique_number(complement(g)) <= 2.
bool is_agreeable(const Graph& g, std::size_t k, std::size_t m);

struct StrippedGraph {
  Graph graph;
  std::size_t stripped = 0;
};

/// Removes every vertex of degree n-1. Throws on complete graphs.
StrippedGraph strip_universal(const Graph& g);

bool has_universal_vertex(const Graph& g);

bool is_chordal(const Graph& g);

/// Searches for a linear order of the maximal cliques in which the cliques
/// containing each vertex are consecutive.
bool is_interval_graph(const Graph& g);

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<std::size_t> degrees;  // ascending
};

DegreeProfile degree_profile(const Graph& g);

using Certificate = std::vector<std::uint64_t>;

struct CanonicalForm {
  /// labeling[i] is the vertex of g placed at canonical position i.
  std::vector<std::size_t> labeling;
  Certificate certificate;
};

/// Equal certificates iff isomorphic graphs. Individualization-refinement
/// with an exhaustive search tree; meant for n <= 14.
CanonicalForm canonical_form(const Graph& g);

}  // namespace agree
