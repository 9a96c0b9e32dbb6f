#include "agree/fixtures.hpp"

#include <array>
#include <initializer_list>
#include <utility>

#include "agree/error.hpp"

namespace agree::fixtures {
namespace {

using Corner = std::pair<Rational, Rational>;

// Axis-parallel rectangle from its lower-left and upper-right corners.
Box rect(Corner low, Corner high) {
  return Box({Interval(low.first, high.first), Interval(low.second, high.second)});
}

Arrangement plane(std::initializer_list<Box> boxes) { return Arrangement(2, boxes); }

// 1-based edge list.
Graph graph_of(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  return g;
}

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

}  // namespace

Arrangement z5() {
  return plane({
      rect({q(1), q(0)}, {q(4), q(5)}),
      rect({q(0), q(3)}, {q(2), q(12)}),
      rect({q(3), q(4)}, {q(6), q(6)}),
      rect({q(5), q(5)}, {q(7), q(10)}),
      rect({q(1), q(7)}, {q(6), q(9)}),
  });
}

Arrangement fig38a() {
  return plane({
      rect({q(5), q(0)}, {q(6), q(20)}),
      rect({q(15), q(0)}, {q(16), q(20)}),
      rect({q(0), q(5)}, {q(20), q(6)}),
      rect({q(0), q(15)}, {q(20), q(16)}),
      rect({q(2), q(1)}, {q(14), q(10)}),
      rect({q(1), q(7)}, {q(8), q(18)}),
      rect({q(12), q(4)}, {q(17), q(14)}),
      rect({q(7), q(13)}, {q(19), q(19)}),
  });
}

Graph fig38a_graph() {
  return graph_of(8, {{3, 2}, {2, 4}, {4, 1}, {1, 3}, {7, 8}, {8, 6}, {6, 5}, {5, 7},
                      {6, 4}, {4, 8}, {8, 2}, {2, 7}, {7, 3}, {3, 5}, {5, 1}, {1, 6}});
}

Arrangement fig38b() {
  // Box 5 starts at y = 4; at y = 3 it would also meet box 8.
  return plane({
      rect({q(1), q(7)}, {q(8), q(9)}),
      rect({q(0), q(3)}, {q(2), q(12)}),
      rect({q(1), q(0)}, {q(4), q(5)}),
      rect({q(3), q(2)}, {q(8), q(6)}),
      rect({q(5), q(4)}, {q(7), q(10)}),
      rect({q(3, 2), q(4)}, {q(6), q(8)}),
      rect({q(13, 2), q(1)}, {q(9), q(11)}),
      rect({q(-1), q(1, 2)}, {q(10), q(7, 2)}),
  });
}

Graph fig38b_graph() {
  return graph_of(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 6}, {3, 6}, {4, 6},
                      {5, 6}, {1, 7}, {5, 7}, {4, 7}, {8, 3}, {8, 4}, {8, 2}, {8, 7}});
}

Graph fig38c_graph() {
  auto g = fig38a_graph();
  g.add_edge(0, 1);
  g.add_edge(5, 6);
  return g;
}

Graph fig134_graph() {
  const auto drawn = graph_of(13, {{1, 2},  {1, 3},  {1, 7},  {1, 9},   {2, 4},   {2, 8},  {2, 10},
                                   {3, 4},  {3, 6},  {3, 12}, {4, 5},   {4, 11},  {5, 7},  {5, 9},
                                   {5, 12}, {6, 8},  {6, 9},  {6, 10},  {7, 10},  {7, 11}, {8, 11},
                                   {8, 12}, {9, 13}, {10, 13}, {11, 13}, {12, 13}});
  return complement(drawn);
}

Graph wheel4() {
  return graph_of(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
}

Arrangement exposure_example() {
  return plane({
      rect({q(1, 2), q(5, 2)}, {q(7, 4), q(7, 2)}),   // A
      rect({q(9, 4), q(7, 4)}, {q(17, 4), q(4)}),     // B
      rect({q(5, 2), q(1, 2)}, {q(7, 2), q(11, 5)}),  // C
      rect({q(0), q(5, 4)}, {q(4), q(2)}),            // D
      rect({q(1, 2), q(1, 2)}, {q(5, 4), q(3, 2)}),   // E
      rect({q(1), q(0)}, {q(2), q(3)}),               // F
  });
}

Graph complete_multipartite_pairs(std::size_t d) {
  if (d < 1) throw Error("K_d(2) needs d >= 1");
  auto g = complete_graph(2 * d);
  for (std::size_t i = 0; i < d; ++i) g.remove_edge(2 * i, 2 * i + 1);
  return g;
}

Arrangement complete_multipartite_pairs_boxes(std::size_t d) {
  if (d < 1) throw Error("K_d(2) needs d >= 1");
  std::vector<Box> boxes;
  for (std::size_t v = 0; v < 2 * d; ++v) {
    std::vector<Interval> sides;
    for (std::size_t axis = 0; axis < d; ++axis) {
      if (v / 2 != axis) {
        sides.emplace_back(q(0), q(3));
      } else if (v % 2 == 0) {
        sides.emplace_back(q(0), q(1));
      } else {
        sides.emplace_back(q(2), q(3));
      }
    }
    boxes.emplace_back(std::move(sides));
  }
  return Arrangement(d, std::move(boxes));
}

Arrangement two_clusters(std::size_t r) {
  if (r < 1) throw Error("two_clusters needs r >= 1");
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < r; ++i) boxes.push_back(Box({Interval(q(0), q(1))}));
  for (std::size_t i = 0; i < r; ++i) boxes.push_back(Box({Interval(q(2), q(3))}));
  return Arrangement(1, std::move(boxes));
}

}  // namespace agree::fixtures
