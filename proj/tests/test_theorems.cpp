#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zfpd/report.hpp"
#include "zfpd/theorems.hpp"

using namespace zfpd;

namespace {

UniverseParams bound(std::size_t n) {
  UniverseParams p;
  p.max_n = n;
  return p;
}

UniverseParams only(std::vector<Graph> graphs) {
  UniverseParams p;
  p.builtin = false;
  p.extra_graphs = std::move(graphs);
  return p;
}

nlohmann::ordered_json stable_json(const VerifyReport& r) {
  auto j = to_json(r);
  j.erase("elapsed_ms");
  return j;
}

bool has_failure_for(const VerifyReport& r, const std::string& g6) {
  for (const auto& f : r.failures) {
    if (f.graph6 == g6) return true;
  }
  return false;
}

}  // namespace

TEST(Verify, RejectsUnknownIdsAndCaps) {
  EXPECT_THROW(verify("BOGUS"), UnknownTheoremError);
  EXPECT_THROW(verify("T1", bound(9)), CapError);
  EXPECT_THROW(verify("T5", bound(13)), CapError);
  EXPECT_EQ(theorem_ids().size(), 16U);
}

TEST(Verify, T1CountsEveryGraphUpToSix) {
  const auto r = verify("T1", bound(6));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.graphs_checked, 1U + 1 + 2 + 6 + 21 + 112);
}

TEST(Verify, T5TableRowsPass) {
  const auto r = verify("T5");
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.graphs_checked, 0U);
}

TEST(Verify, T14IncludesFourByFour) {
  const auto r = verify("T14");
  EXPECT_TRUE(r.passed());
  EXPECT_NE(std::find(r.notes.begin(), r.notes.end(), "P_4 x P_4: gamma_P=2"), r.notes.end());
  EXPECT_EQ(detail::grid_power_domination_formula(4), 2U);
  EXPECT_EQ(detail::grid_power_domination_formula(12), 4U);
  EXPECT_EQ(detail::grid_power_domination_formula(5), 2U);
}

TEST(Verify, DeterministicAcrossRunsAndWorkerCounts) {
  for (const char* id : {"T2", "T6", "T13"}) {
    UniverseParams serial = bound(id == std::string("T13") ? 4 : 6);
    if (id == std::string("T6")) serial.max_n = 9;
    UniverseParams parallel = serial;
    parallel.workers = 3;
    const auto a = verify(id, serial);
    const auto b = verify(id, serial);
    const auto c = verify(id, parallel);
    EXPECT_EQ(stable_json(a), stable_json(b)) << id;
    EXPECT_EQ(stable_json(a), stable_json(c)) << id;
  }
}

TEST(Verify, SuppliedUniverseAndPreconditions) {
  // A disconnected graph and a too-small graph are skipped, not evaluated.
  const auto r = verify("T2", only({path_graph(6), Graph::from_edges(6, {{0, 1}}), cycle_graph(4)}));
  EXPECT_EQ(r.graphs_checked, 1U);
  EXPECT_EQ(r.skipped, 2U);
  const auto t11 = verify("T11", only({cycle_graph(6), complement(cycle_graph(7))}));
  EXPECT_EQ(t11.graphs_checked, 1U);
  EXPECT_EQ(t11.skipped, 1U);
  const auto t7 = verify("T7", only({h_graph(), cycle_graph(5)}));
  EXPECT_EQ(t7.graphs_checked, 1U);
  EXPECT_TRUE(t7.passed());
}

TEST(Verify, T8OuterplanarClaimRefutedByHGraph) {
  const auto r = verify("T8", bound(6));
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(has_failure_for(r, write_graph6(canonical_graph(h_graph()))));
  for (const auto& f : r.failures) EXPECT_EQ(f.claim, "outerplanar and diam<=3 implies gamma_P=1");
}

TEST(Verify, FailuresReplayStandalone) {
  const auto t8 = verify("T8", bound(7));
  ASSERT_FALSE(t8.failures.empty());
  EXPECT_TRUE(replay_failures(t8, bound(7)).empty());
  // A replay that cannot reproduce is reported.
  VerifyReport fake = t8;
  fake.failures.push_back({"Ch", "made up", "x", "y"});
  EXPECT_EQ(replay_failures(fake, bound(7)).size(), 1U);
}

TEST(Verify, ExistenceSearchesReportRecheckedWitnesses) {
  const auto t9 = verify("T9", bound(6));
  ASSERT_EQ(t9.searches.size(), 1U);
  const auto& s = t9.searches.front();
  if (s.found) {
    EXPECT_TRUE(s.rechecked);
    const Graph w = parse_graph6(s.graph6);
    EXPECT_EQ(degree_stats(w).max_degree + 5, w.order());
    EXPECT_GE(power_domination_number(w).value, 3U);
  } else {
    EXPECT_EQ(s.detail, "no witness up to cap");
  }
}

TEST(Verify, T10ClaimHoldsAndConverseSearchRuns) {
  const auto r = verify("T10", bound(7));
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.searches.size(), 1U);
  if (r.searches[0].found) {
    EXPECT_TRUE(r.searches[0].rechecked);
  }
}

TEST(Verify, CoTwoRegularGraphs) {
  // Partitions of n into parts >= 3; all complements are connected for n >= 5.
  EXPECT_EQ(detail::co_two_regular_graphs(6).size(), 2U);  // C6, 2C3
  EXPECT_EQ(detail::co_two_regular_graphs(9).size(), 4U);  // 9, 6+3, 5+4, 3+3+3
  for (const Graph& g : detail::co_two_regular_graphs(8)) EXPECT_TRUE(is_regular(g, 5));
}

TEST(Verify, PendantPathRecognition) {
  EXPECT_TRUE(detail::is_dominated_graph_with_pendant_path(star_graph(5)));
  EXPECT_TRUE(detail::is_dominated_graph_with_pendant_path(path_graph(6)));  // D = P2
  EXPECT_TRUE(detail::is_dominated_graph_with_pendant_path(amalgamate(complete_graph(4), 1, path_graph(4), 0)));
  EXPECT_FALSE(detail::is_dominated_graph_with_pendant_path(cycle_graph(5)));
  EXPECT_FALSE(detail::is_dominated_graph_with_pendant_path(h_graph()));
}

TEST(Report, JsonShape) {
  const auto r = verify("T5");
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"theorem_id", "claim", "universe", "verdict", "graphs_checked", "skipped",
                                            "failures", "notes", "searches", "elapsed_ms"}));
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_NE(to_table(r).find("T5  PASS"), std::string::npos);
}

TEST(Verify, T16CharacterisationRefutedByHouseGraph) {
  // House: square 0-1-2-3 with roof vertex 4 on 0 and 1. Built by hand, with
  // the prism P2 x house assembled from two copies joined by rungs.
  std::vector<std::pair<Vertex, Vertex>> house{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}};
  std::vector<std::pair<Vertex, Vertex>> prism;
  for (auto [a, b] : house) {
    prism.emplace_back(a, b);
    prism.emplace_back(a + 5, b + 5);
  }
  for (Vertex v = 0; v < 5; ++v) prism.emplace_back(v, v + 5);
  const Graph h = Graph::from_edges(5, house);
  const Graph p = Graph::from_edges(10, prism);
  EXPECT_EQ(oracle::minimum(h, oracle::dominating).value, 2U);
  EXPECT_EQ(oracle::minimum(p, oracle::power_dominating).value, 1U);
  EXPECT_FALSE(detail::is_complete_graph(h));
  EXPECT_FALSE(detail::is_dominated_graph_with_pendant_path(h));

  const auto r = verify("T16");
  EXPECT_FALSE(r.passed());
  const std::string pair = write_graph6(path_graph(2)) + " " + write_graph6(canonical_graph(h));
  EXPECT_TRUE(has_failure_for(r, pair)) << "missing failure for " << pair;
  EXPECT_TRUE(replay_failures(r).empty());
}
