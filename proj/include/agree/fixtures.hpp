#pragma once

#include <cstddef>

#include "agree/geometry.hpp"
#include "agree/graph.hpp"

// Reference societies and graphs with known invariants.
namespace agree::fixtures {

/// Five 2-boxes whose intersection graph is the 5-cycle.
Arrangement z5();

/// Eight 2-boxes realizing the 4-regular graph with 16 edges and omega 3.
Arrangement fig38a();
Graph fig38a_graph();

/// Eight 2-boxes realizing the 17-edge graph with max degree 5, omega 3.
Arrangement fig38b();
Graph fig38b_graph();

/// fig38a_graph plus the edges {1,2} and {6,7}; boxicity not known a priori.
Graph fig38c_graph();

/// 8-regular graph on 13 vertices with omega 4: complement of a listed
/// 26-edge graph.
Graph fig134_graph();

/// Wheel with four spokes; the hub is vertex 5.
Graph wheel4();

/// Six boxes A..F in which A is exposed by {y = 5/2}.
Arrangement exposure_example();

/// K_d(2): 2d vertices, every edge except {2i-1, 2i}.
Graph complete_multipartite_pairs(std::size_t d);

/// d-boxes realizing K_d(2): on axis i the i-th pair is split apart.
Arrangement complete_multipartite_pairs_boxes(std::size_t d);

/// r copies of [0,1] and r copies of [2,3] on the line.
Arrangement two_clusters(std::size_t r);

}  // namespace agree::fixtures
