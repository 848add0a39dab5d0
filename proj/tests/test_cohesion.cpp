#include <gtest/gtest.h>

#include <string>

#include "interlock/cohesion.hpp"
#include "interlock/components.hpp"
#include "interlock/random.hpp"

#include "oracles.hpp"

using namespace interlock;

namespace {

JournalGraph triangle_123() {
  JournalGraph g;
  for (const char* l : {"a", "b", "c"}) g.add_vertex(l);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 2);
  g.add_edge(0, 2, 3);
  return g;
}

}  // namespace

TEST(Components, MatchTransitiveClosureOracle) {
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const auto g = random_graph(n, 0.05 + 0.03 * static_cast<double>(seed % 10), 2, seed);
    const auto parts = components(g);
    const auto expected = oracle::components(g);
    ASSERT_EQ(parts.members(), expected) << "seed " << seed;
  }
}

TEST(Components, OrderedBySizeThenSmallestMember) {
  JournalGraph g;
  for (const char* l : {"a", "b", "c", "d", "e", "f"}) g.add_vertex(l);
  g.add_edge(4, 5, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 3, 1);
  const auto p = components(g);
  EXPECT_EQ(p.sizes, (std::vector<std::size_t>{3, 2, 1}));
  EXPECT_EQ(p.assignment, (std::vector<ComponentId>{2, 0, 0, 0, 1, 1}));
}

TEST(Slice, TriangleThresholds) {
  const auto g = triangle_123();
  const auto s2 = m_slice(g, 2);
  EXPECT_EQ(s2.edge_count(), 2u);
  EXPECT_EQ(slice_census(g, 2).giant_size, 3u);
  const auto c3 = slice_census(g, 3);
  EXPECT_EQ(c3.giant_size, 2u);
  EXPECT_EQ(c3.isolated, 1u);
  EXPECT_EQ(c3.component_count_nontrivial, 1u);
  EXPECT_EQ(c3.component_count_total, 2u);
  EXPECT_EQ(slice_census(g, 4).isolated, 3u);
}

TEST(Slice, ZeroThresholdRejected) {
  EXPECT_THROW(m_slice(triangle_123(), 0), Error);
}

TEST(Slice, OneSliceIsTheInput) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_graph(20, 0.2, 6, seed);
    EXPECT_TRUE(same_graph(g, m_slice(g, 1)));
  }
}

TEST(Slice, MonotoneInThreshold) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const LineValue max_value = 1 + seed % 8;
    const auto g = random_graph(40, 0.1, max_value, seed);
    auto previous = slice_census(g, 1);
    for (std::size_t m = 2; m <= max_value + 1; ++m) {
      const auto c = slice_census(g, m);
      EXPECT_GE(c.isolated, previous.isolated);
      EXPECT_LE(c.giant_size, previous.giant_size);
      previous = c;
    }
    EXPECT_EQ(previous.isolated, g.vertex_count());
  }
}

TEST(Groups, TwoK2WithValueSeven) {
  JournalGraph g;
  for (const char* l : {"A", "B", "C", "D", "E"}) g.add_vertex(l);
  g.add_edge(0, 1, 7);
  g.add_edge(2, 3, 7);
  g.add_edge(1, 2, 1);
  g.add_edge(3, 4, 2);
  const auto groups = component_members(g, 6, 2);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].members.size(), 2u);
  EXPECT_EQ(groups[0].members[0].label, "A");
  EXPECT_EQ(groups[0].lines.size(), 1u);
  EXPECT_EQ(groups[0].lines[0].value, 7u);
  EXPECT_EQ(groups[1].members[1].label, "D");
  // Full-network betweenness is attached, not the slice's.
  EXPECT_GT(groups[0].members[1].betweenness, 0.0);
  const std::string text = format_groups(groups, 6);
  EXPECT_NE(text.find("# component 1 (m=6, 2 journals, 1 lines)\n"), std::string::npos);
  EXPECT_NE(text.find("line \"A\" \"B\" 7\n"), std::string::npos);
}

TEST(Groups, MinSizeFilters) {
  const auto g = triangle_123();
  EXPECT_EQ(component_members(g, 3, 3).size(), 0u);
  EXPECT_EQ(component_members(g, 3, 2).size(), 1u);
  EXPECT_THROW(component_members(g, 3, 1), Error);
}
