#include <gtest/gtest.h>

#include <numeric>

#include "agree/error.hpp"
#include "agree/fixtures.hpp"
#include "agree/graph.hpp"
#include "oracles.hpp"

using namespace agree;

TEST(Graph, EdgeEditing) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THROW(g.add_edge(3, 3), Error);
  EXPECT_THROW(g.add_edge(0, 4), Error);
  g.remove_edge(0, 1);
  EXPECT_FALSE(g.adjacent(1, 0));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(Graph, ComplementAndInducedSubgraph) {
  const auto c5 = cycle_graph(5);
  EXPECT_EQ(canonical_form(complement(c5)).certificate, canonical_form(c5).certificate);
  const auto sub = induced_subgraph(c5, bit(0) | bit(1) | bit(2));
  EXPECT_EQ(sub, path_graph(3));
}

TEST(CliqueNumber, KnownGraphs) {
  EXPECT_EQ(clique_number(complete_graph(7)), 7u);
  EXPECT_EQ(clique_number(cycle_graph(5)), 2u);
  EXPECT_EQ(clique_number(empty_graph(4)), 1u);
  EXPECT_EQ(clique_number(fixtures::fig38a_graph()), 3u);
  EXPECT_EQ(clique_number(fixtures::fig134_graph()), 4u);
  EXPECT_EQ(clique_number(fixtures::complete_multipartite_pairs(6)), 6u);
}

TEST(CliqueCount, FigureValues) {
  EXPECT_EQ(count_cliques_of_size(fixtures::fig134_graph(), 4), 39u);
  EXPECT_EQ(count_cliques_of_size(fixtures::fig38a_graph(), 3), 8u);
  EXPECT_EQ(count_cliques_of_size(fixtures::fig38b_graph(), 3), 10u);
  EXPECT_EQ(count_cliques_of_size(fixtures::fig38c_graph(), 3), 12u);
  EXPECT_EQ(count_cliques_of_size(fixtures::fig134_graph(), 5), 0u);
  EXPECT_THROW(count_cliques_of_size(cycle_graph(5), 0), Error);
  EXPECT_THROW(count_cliques_of_size(cycle_graph(5), 6), Error);
}

TEST(CliqueNumber, MatchesSubsetOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + trial % 12, 0.2 + 0.1 * (trial % 7));
    ASSERT_EQ(clique_number(g), oracle::clique_number(g)) << trial;
    ASSERT_EQ(count_cliques_of_size(g, 1 + trial % g.order()),
              oracle::count_cliques(g, 1 + trial % g.order()));
  }
}

TEST(MaximalCliques, CoverEveryEdge) {
  const auto g = fixtures::fig38b_graph();
  const auto cliques = maximal_cliques(g);
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (const auto c : cliques) covered = covered || ((c >> u & 1) && (c >> v & 1));
    EXPECT_TRUE(covered);
  }
  EXPECT_EQ(maximal_cliques(cycle_graph(5)).size(), 5u);
}

TEST(Agreeable, Examples) {
  EXPECT_TRUE(is_agreeable(cycle_graph(5), 2, 3));
  EXPECT_FALSE(is_agreeable(empty_graph(3), 2, 3));
  EXPECT_TRUE(is_agreeable(empty_graph(2), 2, 3));  // m > n
  for (std::size_t r = 1; r <= 6; ++r) {
    EXPECT_TRUE(is_agreeable(disjoint_union(complete_graph(r), complete_graph(r)), 2, 3)) << r;
  }
  EXPECT_FALSE(is_agreeable(disjoint_union(complete_graph(2), empty_graph(2)), 2, 3));
  EXPECT_THROW(is_agreeable(cycle_graph(5), 3, 2), Error);
  EXPECT_THROW(is_agreeable(cycle_graph(5), 1, 3), Error);
}

TEST(Agreeable, GeneralParametersMatchOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = oracle::random_graph(rng, 3 + trial % 6, 0.5);
    const std::size_t m = 3 + trial % 3;
    const std::size_t k = 2 + trial % (m - 1);
    EXPECT_EQ(is_agreeable(g, k, m), oracle::agreeable_km(g, k, m)) << trial;
  }
}

TEST(UniversalVertices, StripAndDetect) {
  const auto w4 = fixtures::wheel4();
  EXPECT_TRUE(has_universal_vertex(w4));
  const auto s = strip_universal(w4);
  EXPECT_EQ(s.stripped, 1u);
  EXPECT_EQ(s.graph, cycle_graph(4));
  EXPECT_FALSE(has_universal_vertex(cycle_graph(5)));
  EXPECT_THROW(strip_universal(complete_graph(3)), Error);
}

TEST(DegreeProfile, FigureValues) {
  const auto a = degree_profile(fixtures::fig38a_graph());
  EXPECT_EQ(a.min_degree, 4u);
  EXPECT_EQ(a.max_degree, 4u);
  EXPECT_EQ(degree_profile(fixtures::fig38b_graph()).max_degree, 5u);
  const auto f = degree_profile(fixtures::fig134_graph());
  EXPECT_EQ(f.min_degree, 8u);
  EXPECT_EQ(f.max_degree, 8u);
  EXPECT_EQ(fixtures::fig134_graph().edge_count(), 52u);
}

TEST(Chordal, Examples) {
  EXPECT_TRUE(is_chordal(path_graph(6)));
  EXPECT_FALSE(is_chordal(cycle_graph(4)));
  EXPECT_FALSE(is_chordal(fixtures::wheel4()));
  EXPECT_TRUE(is_chordal(complete_graph(5)));
}

TEST(IntervalGraph, Examples) {
  EXPECT_TRUE(is_interval_graph(path_graph(7)));
  EXPECT_TRUE(is_interval_graph(disjoint_union(complete_graph(3), complete_graph(2))));
  EXPECT_FALSE(is_interval_graph(cycle_graph(5)));
  // The claw subdivided once is chordal but not interval.
  Graph t(7);
  for (const auto& [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}) t.add_edge(u, v);
  EXPECT_TRUE(is_chordal(t));
  EXPECT_FALSE(is_interval_graph(t));
}

TEST(IntervalGraph, MatchesCliqueOrderOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = oracle::random_graph(rng, 2 + trial % 7, 0.3 + 0.1 * (trial % 6));
    ASSERT_EQ(is_interval_graph(g), oracle::interval_graph(g)) << trial;
  }
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + trial % 11, 0.45);
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = relabel(g, perm);
    const auto cg = canonical_form(g);
    EXPECT_EQ(cg.certificate, canonical_form(h).certificate) << trial;
    // The certificate is the adjacency of g relabeled by the labeling.
    const auto canon = relabel(g, cg.labeling);
    Certificate rows{canon.order()};
    for (std::size_t v = 0; v < canon.order(); ++v) rows.push_back(canon.neighbors(v));
    EXPECT_EQ(rows, cg.certificate);
  }
}

TEST(CanonicalForm, SeparatesNonIsomorphicGraphs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto a = oracle::random_graph(rng, n, 0.5);
    const auto b = oracle::random_graph(rng, n, 0.5);
    EXPECT_EQ(canonical_form(a).certificate == canonical_form(b).certificate,
              oracle::canonical(a) == oracle::canonical(b))
        << trial;
  }
  EXPECT_NE(canonical_form(fixtures::fig38a_graph()).certificate,
            canonical_form(fixtures::fig38b_graph()).certificate);
}
