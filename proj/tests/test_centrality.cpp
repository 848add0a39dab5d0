#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "interlock/centrality.hpp"
#include "interlock/random.hpp"
#include "interlock/ranking.hpp"
#include "interlock/report.hpp"

#include "oracles.hpp"

using namespace interlock;

namespace {

JournalGraph graph_of(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  JournalGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v + 1));
  for (const auto& [u, v] : edges) g.add_edge(u, v, 1);
  return g;
}

JournalGraph star(std::size_t leaves) {
  JournalGraph g;
  g.add_vertex("hub");
  for (std::size_t i = 1; i <= leaves; ++i) {
    g.add_edge(0, g.add_vertex("leaf " + std::to_string(i)), 1);
  }
  return g;
}

JournalGraph complete(std::size_t n) {
  JournalGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("k" + std::to_string(v));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v, 1);
  }
  return g;
}

}  // namespace

TEST(Degree, NormalizedByNMinusOne) {
  const auto d = degree_centrality(star(4));
  EXPECT_EQ(d[0].degree, 4u);
  EXPECT_DOUBLE_EQ(d[0].normalized, 1.0);
  EXPECT_DOUBLE_EQ(d[1].normalized, 0.25);
  JournalGraph one;
  one.add_vertex("alone");
  EXPECT_THROW(degree_centrality(one), Error);
}

TEST(Geodesics, CycleC4) {
  const auto g = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto t = all_pairs_geodesics(g);
  EXPECT_EQ(t.distance(0, 2), 2u);
  EXPECT_DOUBLE_EQ(t.path_count(0, 2), 2.0);
  EXPECT_DOUBLE_EQ(t.path_count(0, 1), 1.0);
  for (double c : closeness_centrality(g)) EXPECT_DOUBLE_EQ(c, 3.0 / 4.0);
  for (double b : betweenness_centrality(g)) EXPECT_DOUBLE_EQ(b, 1.0 / 6.0);
}

TEST(Geodesics, UnreachablePairs) {
  const auto g = graph_of(3, {{0, 1}});
  const auto t = all_pairs_geodesics(g);
  EXPECT_EQ(t.distance(0, 2), kUnreachable);
  EXPECT_DOUBLE_EQ(t.path_count(0, 2), 0.0);
  EXPECT_EQ(t.distance(1, 1), 0u);
}

TEST(Closeness, StarValues) {
  const auto c = closeness_centrality(star(4));
  EXPECT_DOUBLE_EQ(c[0], 1.0);
  EXPECT_DOUBLE_EQ(c[1], 4.0 / 7.0);
}

TEST(Closeness, K2InsideSixVertices) {
  const auto g = graph_of(6, {{0, 1}});
  EXPECT_DOUBLE_EQ(closeness_centrality(g, ClosenessVariant::corrected)[0], 0.2);
  EXPECT_DOUBLE_EQ(closeness_centrality(g, ClosenessVariant::verbal)[0], 1.0);
  EXPECT_DOUBLE_EQ(closeness_centrality(g)[5], 0.0);
}

TEST(Closeness, VariantsAgreeOnConnectedGraphs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_graph(12, 0.6, 1, seed);
    if (components(g).component_count() != 1) continue;
    const auto a = closeness_centrality(g, ClosenessVariant::verbal);
    const auto b = closeness_centrality(g, ClosenessVariant::corrected);
    for (std::size_t v = 0; v < a.size(); ++v) EXPECT_DOUBLE_EQ(a[v], b[v]);
  }
}

TEST(Betweenness, PathP3) {
  const auto b = betweenness_centrality(graph_of(3, {{0, 1}, {1, 2}}));
  EXPECT_DOUBLE_EQ(b[1], 1.0);
  EXPECT_DOUBLE_EQ(b[0], 0.0);
  EXPECT_DOUBLE_EQ(b[2], 0.0);
}

TEST(Betweenness, StarHubIsOne) {
  const auto b = betweenness_centrality(star(4));
  EXPECT_DOUBLE_EQ(b[0], 1.0);
  for (std::size_t v = 1; v < b.size(); ++v) EXPECT_DOUBLE_EQ(b[v], 0.0);
}

TEST(Betweenness, CompleteGraphIsZero) {
  for (double b : betweenness_centrality(complete(5))) EXPECT_DOUBLE_EQ(b, 0.0);
}

TEST(Betweenness, NeedsThreeVertices) {
  EXPECT_THROW(betweenness_centrality(graph_of(2, {{0, 1}})), Error);
}

TEST(Betweenness, MatchesPathEnumerationOracle) {
  std::size_t graphs = 0;
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    const std::size_t n = 3 + seed % 10;
    const double p = 0.15 + 0.05 * static_cast<double>(seed % 12);
    const auto g = random_graph(n, p, 3, seed);
    const auto fast = betweenness_centrality(g, 1 + seed % 4);
    const auto slow = oracle::betweenness(g);
    for (std::size_t v = 0; v < n; ++v) {
      ASSERT_LT(std::fabs(fast[v] - slow[v]), 1e-12) << "seed " << seed << " vertex " << v;
    }
    ++graphs;
  }
  EXPECT_GE(graphs, 200u);
}

TEST(Betweenness, LeavesAndIsolatesAreZero) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_graph(25, 0.1, 1, seed);
    const auto b = betweenness_centrality(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) <= 1) {
        EXPECT_EQ(b[v], 0.0);
      }
      EXPECT_GE(b[v], 0.0);
      EXPECT_LE(b[v], 1.0 + 1e-12);
    }
  }
}

TEST(Betweenness, WorkerCountDoesNotChangeBits) {
  const auto g = random_graph(300, 0.02, 3, 42);
  const auto one = betweenness_centrality(g, 1);
  for (std::size_t w : {2u, 3u, 8u}) {
    const auto many = betweenness_centrality(g, w);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t v = 0; v < one.size(); ++v) EXPECT_EQ(one[v], many[v]);
  }
  EXPECT_EQ(closeness_centrality(g, ClosenessVariant::corrected, 1),
            closeness_centrality(g, ClosenessVariant::corrected, 8));
}

TEST(Ranking, CompetitionAndMidRanks) {
  const std::vector<int> v = {5, 3, 3, 1};
  EXPECT_EQ(competition_ranks<int>(v), (std::vector<std::int64_t>{1, 2, 2, 4}));
  EXPECT_EQ(midranks<int>(v), (std::vector<double>{1, 2.5, 2.5, 4}));
  EXPECT_EQ(tie_groups<int>(v), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Ranking, SeventyFourZerosShareRank673) {
  std::vector<int> degree;
  for (int i = 0; i < 672; ++i) degree.push_back(1000 - i);
  for (int i = 0; i < 74; ++i) degree.push_back(0);
  const auto r = competition_ranks<int>(degree);
  for (std::size_t i = 672; i < r.size(); ++i) EXPECT_EQ(r[i], 673);
}

TEST(Ranking, SnappedRanksIgnoreFloatingNoise) {
  const std::vector<double> v = {0.3, 0.1 + 0.2, 0.2};
  EXPECT_EQ(snapped_competition_ranks(v), (std::vector<std::int64_t>{1, 1, 3}));
}

TEST(Centralization, StarIsOneForAllMeasures) {
  const auto c = centralization(star(6));
  EXPECT_NEAR(c.degree_centralization, 1.0, 1e-12);
  EXPECT_NEAR(c.closeness_centralization, 1.0, 1e-12);
  EXPECT_NEAR(c.betweenness_centralization, 1.0, 1e-12);
  EXPECT_EQ(c.closeness_subnetwork_size, 7u);
}

TEST(Centralization, CompleteGraphIsZero) {
  const auto c = centralization(complete(5));
  EXPECT_DOUBLE_EQ(c.degree_centralization, 0.0);
  EXPECT_DOUBLE_EQ(c.closeness_centralization, 0.0);
  EXPECT_DOUBLE_EQ(c.betweenness_centralization, 0.0);
}

TEST(Centralization, ClosenessTakenOnLargestComponent) {
  // A star on 4 vertices plus two isolates: the star alone is maximally
  // centralized.
  JournalGraph g = star(3);
  g.add_vertex("x");
  g.add_vertex("y");
  const auto c = centralization(g);
  EXPECT_EQ(c.closeness_subnetwork_size, 4u);
  EXPECT_NEAR(c.closeness_centralization, 1.0, 1e-12);
}

TEST(Centralization, BoundedInUnitInterval) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto c = centralization(random_graph(20, 0.15, 2, seed));
    for (double x : {c.degree_centralization, c.closeness_centralization,
                     c.betweenness_centralization}) {
      EXPECT_GE(x, -1e-12);
      EXPECT_LE(x, 1.0 + 1e-12);
    }
  }
}

TEST(Report, PathP3Csv) {
  const auto r = centrality_report(graph_of(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(r.to_csv(),
            "journal,degree,normalized_degree,rank_degree,closeness,rank_closeness,"
            "betweenness_x100,rank_betweenness\n"
            "v1,1,0.500,2,0.667,2,0.000,2\n"
            "v2,2,1.000,1,1.000,1,100.000,1\n"
            "v3,1,0.500,2,0.667,2,0.000,2\n");
}
