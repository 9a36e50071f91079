#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zfpd/canonical.hpp"
#include "zfpd/families.hpp"
#include "zfpd/graph.hpp"

using namespace zfpd;

namespace {

Graph two_components() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}}); }  // K3 + K1

void expect_valid(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    EXPECT_FALSE(g.has_edge(u, u));
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
    EXPECT_TRUE(g.neighbors(u).is_subset_of(g.vertices()));
  }
}

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s{0, 2, 5};
  EXPECT_EQ(s.size(), 3U);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.lowest(), 0U);
  EXPECT_EQ(to_string(s), "{0,2,5}");
  EXPECT_EQ(s.without(0).lowest(), 2U);
  EXPECT_EQ((s | VertexSet{1}).size(), 4U);
  EXPECT_EQ((s & VertexSet{2, 3}), VertexSet{2});
  EXPECT_EQ((s - VertexSet{2}), (VertexSet{0, 5}));
  EXPECT_EQ(VertexSet::first(64).size(), 64U);
  EXPECT_THROW(VertexSet{}.insert(64), std::out_of_range);
}

TEST(VertexSet, SubsetsOfSizeAscendingBitmask) {
  std::vector<std::uint64_t> seen;
  for_each_subset_of_size(5, 2, [&](VertexSet s) {
    seen.push_back(s.bits());
    return false;
  });
  ASSERT_EQ(seen.size(), 10U);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

TEST(GraphCore, RejectsInvalidInput) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(Graph(65), std::invalid_argument);
  EXPECT_THROW(Graph::from_adjacency({VertexSet{1}, VertexSet{}}), std::invalid_argument);
}

TEST(GraphCore, NeighborExamples) {
  EXPECT_EQ(path_graph(3).neighbors(1), (VertexSet{0, 2}));
  EXPECT_EQ(complete_graph(4).neighbors(0), (VertexSet{1, 2, 3}));
  EXPECT_EQ(cycle_graph(5).neighbors(2), (VertexSet{1, 3}));
  EXPECT_EQ(cycle_graph(5).closed_neighbors(2), (VertexSet{1, 2, 3}));
  EXPECT_THROW(cycle_graph(5).neighbors(5), std::out_of_range);
}

TEST(GraphCore, DegreeStatsExamples) {
  auto star = degree_stats(star_graph(5));
  EXPECT_EQ(star.min_degree, 1U);
  EXPECT_EQ(star.max_degree, 4U);
  auto c6 = degree_stats(cycle_graph(6));
  EXPECT_EQ(c6.min_degree, 2U);
  EXPECT_EQ(c6.max_degree, 2U);
  auto p4 = degree_stats(path_graph(4));
  EXPECT_EQ(p4.min_degree, 1U);
  EXPECT_EQ(p4.max_degree, 2U);
  EXPECT_THROW(degree_stats(Graph(0)), std::invalid_argument);
}

TEST(GraphCore, DistanceExamples) {
  EXPECT_EQ(distance(path_graph(5), 0, 4), 4U);
  EXPECT_EQ(distance(cycle_graph(6), 0, 3), 3U);
  EXPECT_FALSE(distance(two_components(), 0, 3).has_value());
  EXPECT_THROW(distance(path_graph(3), 0, 3), std::out_of_range);
  EXPECT_THROW(diameter(two_components()), std::domain_error);
  EXPECT_FALSE(diameter_or_infinite(two_components()).has_value());
}

TEST(GraphCore, DiameterExamples) {
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_EQ(diameter(complete_graph(n)), 1U);
  EXPECT_EQ(diameter(cycle_graph(8)), 4U);
  EXPECT_EQ(diameter(path_graph(6)), 5U);
}

TEST(GraphCore, TwinExamples) {
  const Graph k4 = complete_graph(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) EXPECT_TRUE(are_twins(k4, u, v));
  const Graph k23 = complete_multipartite(PartiteSpec({2, 3}));
  EXPECT_TRUE(are_twins(k23, 0, 1));  // the two degree-3 vertices
  EXPECT_FALSE(are_twins(path_graph(4), 0, 3));
  EXPECT_THROW(are_twins(k4, 1, 1), std::invalid_argument);
}

TEST(GraphCore, ConnectivityExamples) {
  EXPECT_TRUE(is_connected(cycle_graph(5)));
  EXPECT_FALSE(is_connected(two_components()));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_EQ(components(two_components()).size(), 2U);
}

TEST(GraphCore, ComplementExamples) {
  EXPECT_EQ(complement(complete_graph(4)).edge_count(), 0U);
  EXPECT_TRUE(oracle::isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  EXPECT_TRUE(oracle::isomorphic(complement(path_graph(4)), path_graph(4)));
}

TEST(GraphCore, DeleteEdgeExamples) {
  EXPECT_TRUE(oracle::isomorphic(delete_edge(complete_graph(3), 0, 1), path_graph(3)));
  EXPECT_TRUE(oracle::isomorphic(delete_edge(cycle_graph(4), 1, 2), path_graph(4)));
  const Graph k33 = complete_multipartite(PartiteSpec({3, 3}));
  EXPECT_EQ(degree_sequence(delete_edge(k33, 0, 3)), (std::vector<std::size_t>{3, 3, 3, 3, 2, 2}));
  EXPECT_THROW(delete_edge(path_graph(3), 0, 2), std::invalid_argument);
}

TEST(GraphCore, InducedSubgraphExamples) {
  auto sub = induced_subgraph(cycle_graph(5), VertexSet{1, 2, 3});
  EXPECT_TRUE(oracle::isomorphic(sub.graph, path_graph(3)));
  EXPECT_EQ(sub.original, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(oracle::isomorphic(induced_subgraph(complete_graph(5), VertexSet{0, 2, 4}).graph, complete_graph(3)));
  EXPECT_EQ(induced_subgraph(complete_graph(5), VertexSet{}).graph.order(), 0U);
}

TEST(GraphCoreProperties, RandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 10, 0.4, rng);
    expect_valid(g);
    expect_valid(complement(g));
    EXPECT_EQ(complement(complement(g)), g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) EXPECT_EQ(are_twins(g, u, v), are_twins(g, v, u));
    if (!is_connected(g)) continue;
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = 0; b < g.order(); ++b)
        for (Vertex c = 0; c < g.order(); ++c) EXPECT_LE(*distance(g, a, c), *distance(g, a, b) + *distance(g, b, c));
  }
}

TEST(Families, GenerateExamples) {
  const Graph w5 = wheel_graph(5);
  EXPECT_EQ(degree_stats(w5).max_degree, 4U);
  EXPECT_EQ(w5.edge_count(), 8U);
  const Graph k33 = complete_multipartite(PartiteSpec({3, 3}));
  EXPECT_EQ(k33.edge_count(), 9U);
  EXPECT_TRUE(is_regular(k33, 3));
  const Graph w = wagner_graph();
  EXPECT_EQ(w.order(), 8U);
  EXPECT_EQ(w.edge_count(), 12U);
  EXPECT_TRUE(is_regular(w, 3));
  bool twin_found = false;
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v) twin_found = twin_found || are_twins(w, u, v);
  EXPECT_FALSE(twin_found);
}

TEST(Families, EdgeCountsAndConnectivity) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(path_graph(n).edge_count(), n - 1);
    EXPECT_EQ(complete_graph(n).edge_count(), n * (n - 1) / 2);
    EXPECT_TRUE(is_connected(path_graph(n)));
    EXPECT_TRUE(is_connected(complete_graph(n)));
    if (n >= 3) {
      EXPECT_EQ(cycle_graph(n).edge_count(), n);
      EXPECT_TRUE(is_connected(cycle_graph(n)));
    }
    if (n >= 4) {
      EXPECT_TRUE(is_connected(wheel_graph(n)));
    }
    if (n >= 2) {
      EXPECT_TRUE(is_connected(star_graph(n)));
    }
  }
  for (const auto& spec : PartiteSpec::all_up_to(8)) {
    const Graph g = complete_multipartite(spec);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.order(), spec.order());
  }
}

TEST(Families, HGraphAndSpider) {
  const Graph h = h_graph();
  EXPECT_EQ(h.order(), 6U);
  EXPECT_TRUE(is_tree(h));
  EXPECT_EQ(degree_sequence(h), (std::vector<std::size_t>{3, 3, 1, 1, 1, 1}));
  const Graph s = spider_graph({2, 2, 2});
  EXPECT_EQ(s.order(), 7U);
  EXPECT_TRUE(is_tree(s));
  EXPECT_EQ(degree_stats(s).max_degree, 3U);
}

TEST(Families, RejectsParametersBelowMinimum) {
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
  EXPECT_THROW(wheel_graph(3), std::invalid_argument);
  EXPECT_THROW(path_graph(0), std::invalid_argument);
  EXPECT_THROW(spider_graph({1, 1}), std::invalid_argument);
  EXPECT_THROW(spider_graph({1, 0, 2}), std::invalid_argument);
  EXPECT_THROW(PartiteSpec({3}), std::invalid_argument);
  EXPECT_THROW(PartiteSpec({3, 2}), std::invalid_argument);
  EXPECT_THROW(PartiteSpec({0, 2}), std::invalid_argument);
}

TEST(Families, ByName) {
  ASSERT_TRUE(family_from_name("wheel"));
  EXPECT_EQ(generate(*family_from_name("wheel"), {6, {}, {}}), wheel_graph(6));
  EXPECT_EQ(generate(*family_from_name("multipartite"), {0, {2, 3}, {}}), complete_multipartite(PartiteSpec({2, 3})));
  EXPECT_EQ(generate(*family_from_name("h-graph"), {}), h_graph());
  EXPECT_FALSE(family_from_name("petersen"));
}
