#include <gtest/gtest.h>

#include <set>

#include "agree/bounds.hpp"
#include "agree/eckhoff.hpp"
#include "agree/fixtures.hpp"
#include "agree/search.hpp"
#include "oracles.hpp"

using namespace agree;

namespace {

constexpr int kCases = 1000;

Arrangement random_case(std::mt19937_64& rng, int trial) {
  return oracle::random_arrangement(rng, 1 + trial % 9, 1 + trial % 3, 6 + trial % 10);
}

}  // namespace

TEST(Property, HellyDepthEqualsCliqueNumber) {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < kCases; ++trial) {
    const auto arr = random_case(rng, trial);
    const auto g = intersection_graph(arr);
    ASSERT_EQ(g, oracle::intersection_graph(arr)) << trial;
    const auto depth = oracle::depth(arr);
    ASSERT_EQ(depth, oracle::clique_number(g)) << trial;
    ASSERT_EQ(agreement_number(arr), depth) << trial;
    ASSERT_EQ(clique_number(g), depth) << trial;
  }
}

TEST(Property, AgreeabilityFormsAgree) {
  std::mt19937_64 rng(1002);
  int agreeable = 0;
  for (int trial = 0; trial < kCases; ++trial) {
    const auto arr = random_case(rng, trial);
    const auto g = intersection_graph(arr);
    const bool graph_form = is_agreeable(g, 2, 3);
    ASSERT_EQ(graph_form, oracle::agreeable_triples(g)) << trial;
    ASSERT_EQ(graph_form, oracle::clique_number(complement(g)) <= 2) << trial;
    ASSERT_EQ(graph_form, has_intersecting_pair_in_every_triple(arr)) << trial;
    agreeable += graph_form;
  }
  EXPECT_GT(agreeable, kCases / 10);
  EXPECT_LT(agreeable, kCases);
  // Plain random graphs too, for general (k, m).
  for (int trial = 0; trial < kCases; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + trial % 8, 0.3 + 0.1 * (trial % 6));
    const std::size_t m = 2 + trial % 4;
    const std::size_t k = 2 + trial % (m - 1);
    ASSERT_EQ(is_agreeable(g, k, m), oracle::agreeable_km(g, k, m)) << trial;
  }
}

TEST(Property, SplitIdentityForExposedSplits) {
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < kCases; ++trial) {
    const auto arr = oracle::random_arrangement(rng, 2 + trial % 8, 1 + trial % 3, 6 + trial % 10);
    const auto cert = find_exposed(arr);
    const auto s = split(arr, cert.box_index);
    const auto whole = oracle::f_vector(arr);
    const auto rest = oracle::f_vector(s.remaining);
    const auto traces = oracle::f_vector(s.traces);
    const auto at = [](const std::vector<std::int64_t>& f, std::size_t k) {
      return k < f.size() ? f[k] : std::int64_t{0};
    };
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto expected = at(rest, k) + (k == 0 ? 1 : at(traces, k - 1));
      ASSERT_EQ(at(whole, k), expected) << trial << " k=" << k;
      if (k >= 1) ASSERT_TRUE(verify_split_identity(arr, cert.box_index, k)) << trial;
    }
    ASSERT_EQ(f_vector(arr).entries, whole) << trial;
  }
}

TEST(Property, ExposureCertificatesValidate) {
  std::mt19937_64 rng(1004);
  for (int trial = 0; trial < kCases; ++trial) {
    const auto arr = random_case(rng, trial);
    const auto cert = find_exposed(arr);
    ASSERT_TRUE(is_exposing(arr, cert)) << trial;
    ASSERT_TRUE(oracle::exposes(arr, cert.box_index, cert.axis, cert.side == Face::lower, cert.coordinate))
        << trial;
  }
}

TEST(Property, PrunedEnumerationMatchesOracle) {
  const auto table = EtaTable::standard();
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::vector<bool>>> found;
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto levels = enumerate_agreeable_levels(r, 6, table);
    for (const auto& level : levels)
      for (const auto& g : level.survivors) found[{r, g.order()}].insert(oracle::canonical(g));
  }
  std::mt19937_64 rng(1005);
  for (int trial = 0; trial < kCases; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t r = 1 + (trial / 6) % 4;
    const auto g = oracle::random_graph(rng, n, 0.5 + 0.1 * (trial % 4));
    const bool member = oracle::agreeable_triples(g) && oracle::clique_number(g) <= r;
    ASSERT_EQ((found[{r, n}].count(oracle::canonical(g)) == 1), member) << trial;
  }
}

TEST(Property, EdgeSandwich) {
  std::vector<Arrangement> realized = {fixtures::z5(), fixtures::fig38a(), fixtures::fig38b(),
                                       fixtures::exposure_example()};
  for (std::size_t d = 1; d <= 6; ++d) realized.push_back(fixtures::complete_multipartite_pairs_boxes(d));
  for (std::size_t r = 1; r <= 6; ++r) realized.push_back(fixtures::two_clusters(r));
  std::mt19937_64 rng(1006);
  std::size_t random_realized = 0;
  for (int tries = 0; random_realized < kCases && tries < 200 * kCases; ++tries) {
    const auto arr = oracle::random_arrangement(rng, 3 + tries % 8, 1 + tries % 3, 4 + tries % 6);
    if (!is_agreeable(intersection_graph(arr), 2, 3)) continue;
    realized.push_back(arr);
    ++random_realized;
  }
  ASSERT_EQ(random_realized, static_cast<std::size_t>(kCases));
  for (const auto& arr : realized) {
    const auto g = intersection_graph(arr);
    if (!is_agreeable(g, 2, 3)) continue;  // exposure_example is only a geometry fixture
    const auto n = g.order();
    const auto omega = clique_number(g);
    if (omega < 2) continue;  // the bounds start at r = 2
    const auto edges = static_cast<double>(g.edge_count());
    ASSERT_LE(to_double(edge_lower_bound(n, omega)), edges);
    ASSERT_LE(edges, e_upper_closed(n, omega, arr.dimension(), gamma_lower(arr.dimension() - 1)) + 1e-9);
  }
}
