#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zfpd/enumerate.hpp"
#include "zfpd/families.hpp"
#include "zfpd/graph6.hpp"
#include "zfpd/minor.hpp"

using namespace zfpd;

namespace {

const Graph& k4() {
  static const Graph g = complete_graph(4);
  return g;
}
const Graph& k23() {
  static const Graph g = complete_multipartite(PartiteSpec({2, 3}));
  return g;
}

}  // namespace

TEST(Minor, Examples) {
  auto self = has_minor(k4(), k4());
  ASSERT_TRUE(self);
  EXPECT_EQ(check_minor_witness(k4(), k4(), *self), "");
  EXPECT_FALSE(has_minor(cycle_graph(5), k4()));
  auto wheel = has_minor(wheel_graph(5), k4());
  ASSERT_TRUE(wheel);
  EXPECT_EQ(check_minor_witness(wheel_graph(5), k4(), *wheel), "");
}

TEST(Minor, RejectsLargePatterns) { EXPECT_THROW(has_minor(complete_graph(8), complete_graph(7)), std::invalid_argument); }

TEST(Minor, DisconnectedPatternAndHost) {
  const Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(has_minor(path_graph(4), two_edges));
  EXPECT_FALSE(has_minor(path_graph(3), two_edges));
  const Graph k4_plus_k1 = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(has_minor(k4_plus_k1, k4()));
}

TEST(Minor, WitnessCheckerRejectsBadModels) {
  MinorWitness w{{VertexSet{0}, VertexSet{2}}};
  EXPECT_NE(check_minor_witness(path_graph(3), complete_graph(2), w), "");
  MinorWitness overlap{{VertexSet{0, 1}, VertexSet{1, 2}}};
  EXPECT_NE(check_minor_witness(path_graph(3), complete_graph(2), overlap), "");
}

TEST(Minor, MatchesLabelledOracleOnSmallGraphs) {
  const std::vector<Graph> patterns{complete_graph(3), k4(), k23(), cycle_graph(4), star_graph(4)};
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      for (const Graph& p : patterns) {
        const auto w = has_minor(g, p);
        EXPECT_EQ(w.has_value(), oracle::has_minor(g, p)) << write_graph6(g);
        if (w) {
          EXPECT_EQ(check_minor_witness(g, p, *w), "");
        }
      }
    }
  }
}

TEST(Minor, MonotoneInPattern) {
  for (const Graph& g : connected_graphs(7)) {
    if (has_minor(g, k4())) {
      EXPECT_TRUE(has_minor(g, complete_graph(3)));
    }
  }
}

TEST(Outerplanar, Examples) {
  for (std::size_t n = 3; n <= 10; ++n) EXPECT_TRUE(is_outerplanar(cycle_graph(n)));
  EXPECT_FALSE(is_outerplanar(k4()));
  EXPECT_FALSE(is_outerplanar(k23()));
  EXPECT_TRUE(is_outerplanar(h_graph()));
}

TEST(Outerplanar, CountsMatchIndependentEnumeration) {
  // Counts of connected outerplanar graphs by order, from networkx-generated
  // graph atlases filtered with an independent K4/K_{2,3} minor test.
  const std::vector<std::size_t> expected{1, 1, 2, 5, 13, 46, 172};
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    for (const Graph& g : connected_graphs(n)) count += is_outerplanar(g) ? 1 : 0;
    EXPECT_EQ(count, expected[n - 1]) << "n=" << n;
  }
}

TEST(Planar, Examples) {
  EXPECT_FALSE(is_planar(complete_graph(5)));
  EXPECT_FALSE(is_planar(complete_multipartite(PartiteSpec({3, 3}))));
  EXPECT_TRUE(is_planar(wheel_graph(7)));
  EXPECT_FALSE(is_planar(wagner_graph()));
  EXPECT_THROW(is_planar(path_graph(13)), std::invalid_argument);
}

TEST(Planar, CountsMatchIndependentEnumeration) {
  // Connected planar graphs by order (networkx check_planarity over the atlas).
  const std::vector<std::size_t> expected{1, 1, 2, 6, 20, 99, 646};
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    for (const Graph& g : connected_graphs(n)) count += is_planar(g) ? 1 : 0;
    EXPECT_EQ(count, expected[n - 1]) << "n=" << n;
  }
}

TEST(Structure, OuterplanarImpliesPlanarAndEdgeBounds) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const bool outer = is_outerplanar(g);
      const bool planar = is_planar(g);
      if (outer) {
        EXPECT_TRUE(planar);
      }
      if (outer && n >= 2) {
        EXPECT_LE(g.edge_count(), 2 * n - 3);
      }
      if (planar && n >= 3) {
        EXPECT_LE(g.edge_count(), 3 * n - 6);
      }
    }
  }
}
