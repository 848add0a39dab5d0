#pragma once

// Cohesive subgroups of a valued network: the m-slice keeps lines with value
// >= m, and its (weak) components are the subgroups. The graph is undirected,
// so weak components are ordinary connected components.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "interlock/centrality.hpp"
#include "interlock/components.hpp"
#include "interlock/distribution.hpp"
#include "interlock/error.hpp"
#include "interlock/graph.hpp"
#include "interlock/partition.hpp"
#include "interlock/text.hpp"

namespace interlock {

inline void check_threshold(std::size_t m) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "slice threshold m must be >= 1");
}

/// All vertices; only lines with value >= m.
inline JournalGraph m_slice(const JournalGraph& g, std::size_t m) {
  check_threshold(m);
  return subgraph_by_edges(g, [m](const Edge& e) { return e.value >= m; });
}

struct SliceCensus {
  std::size_t m = 1;
  /// Components with at least two vertices.
  std::size_t component_count_nontrivial = 0;
  /// All components, singletons included.
  std::size_t component_count_total = 0;
  std::size_t journals_in_nontrivial = 0;
  std::size_t isolated = 0;
  std::size_t giant_size = 0;
  /// Component size -> number of components of that size.
  DistributionTable size_histogram;

  static constexpr const char* kCsvHeader = "m,components,journals,isolated,giant,components_total\n";

  std::string csv_row() const {
    return std::to_string(m) + ',' + std::to_string(component_count_nontrivial) + ',' +
           std::to_string(journals_in_nontrivial) + ',' + std::to_string(isolated) + ',' +
           std::to_string(giant_size) + ',' + std::to_string(component_count_total) + '\n';
  }
};

inline SliceCensus census_of(const ComponentPartition& parts, std::size_t m) {
  SliceCensus c;
  c.m = m;
  c.component_count_total = parts.component_count();
  c.giant_size = parts.giant_size();
  for (std::size_t size : parts.sizes) {
    if (size >= 2) {
      ++c.component_count_nontrivial;
      c.journals_in_nontrivial += size;
    } else {
      ++c.isolated;
    }
  }
  c.size_histogram = tabulate<std::size_t>(parts.sizes);
  return c;
}

inline SliceCensus slice_census(const JournalGraph& g, std::size_t m) {
  return census_of(components(m_slice(g, m)), m);
}

struct GroupMember {
  VertexId id;
  std::string label;
  /// Betweenness in the complete network, in [0, 1].
  double betweenness;
};

struct GroupLine {
  std::string u;
  std::string v;
  LineValue value;
};

/// One cohesive subgroup: a component of the m-slice.
struct CohesiveGroup {
  ComponentId component;
  std::vector<GroupMember> members;  // sorted by label
  std::vector<GroupLine> lines;      // sorted by (u, v) label
};

/// Components of the m-slice with at least `min_size` members. Each member
/// carries its betweenness in `full_betweenness` (the complete network).
inline std::vector<CohesiveGroup> component_members(const JournalGraph& g, std::size_t m,
                                                    std::size_t min_size,
                                                    std::span<const double> full_betweenness) {
  check_threshold(m);
  if (min_size < 2) throw Error(ErrorKind::invalid_argument, "min_size must be >= 2");
  if (full_betweenness.size() != g.vertex_count()) {
    throw Error(ErrorKind::shape, "betweenness vector does not match the graph");
  }
  const JournalGraph slice = m_slice(g, m);
  const ComponentPartition parts = components(slice);
  const auto members = parts.members();
  std::vector<CohesiveGroup> groups;
  for (std::size_t c = 0; c < members.size(); ++c) {
    if (members[c].size() < min_size) continue;
    CohesiveGroup group;
    group.component = static_cast<ComponentId>(c);
    for (VertexId v : members[c]) {
      group.members.push_back({v, g.label(v), full_betweenness[v]});
    }
    std::sort(group.members.begin(), group.members.end(),
              [](const GroupMember& a, const GroupMember& b) { return a.label < b.label; });
    for (const Edge& e : slice.edges()) {
      if (parts.assignment[e.u] != c) continue;
      std::string a = slice.label(e.u), b = slice.label(e.v);
      if (b < a) std::swap(a, b);
      group.lines.push_back({std::move(a), std::move(b), e.value});
    }
    std::sort(group.lines.begin(), group.lines.end(), [](const GroupLine& x, const GroupLine& y) {
      return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });
    groups.push_back(std::move(group));
  }
  return groups;
}

/// Same, computing the complete-network betweenness first.
inline std::vector<CohesiveGroup> component_members(const JournalGraph& g, std::size_t m,
                                                    std::size_t min_size, std::size_t workers = 1) {
  check_threshold(m);
  if (min_size < 2) throw Error(ErrorKind::invalid_argument, "min_size must be >= 2");
  const auto b = betweenness_centrality(g, workers);
  return component_members(g, m, min_size, std::span<const double>(b));
}

/// Text listing, one block per group:
///
///   # component 3 (m=6, 3 journals, 2 lines)
///   vertex "Public Choice" 0.512
///   line "A" "B" 7
///
/// Betweenness is printed x100 at 3 decimals.
inline std::string format_groups(std::span<const CohesiveGroup> groups, std::size_t m) {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  };
  std::string out;
  for (const auto& g : groups) {
    out += "# component " + std::to_string(g.component + 1) + " (m=" + std::to_string(m) + ", " +
           std::to_string(g.members.size()) + " journals, " + std::to_string(g.lines.size()) +
           " lines)\n";
    for (const auto& v : g.members) {
      out += "vertex " + quoted(v.label) + ' ' + text::fixed(100.0 * v.betweenness, 3) + '\n';
    }
    for (const auto& l : g.lines) {
      out += "line " + quoted(l.u) + ' ' + quoted(l.v) + ' ' + std::to_string(l.value) + '\n';
    }
    out += '\n';
  }
  return out;
}

}  // namespace interlock
