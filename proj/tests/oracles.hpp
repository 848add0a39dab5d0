#pragma once

// Brute-force reference implementations. Slow on purpose: nothing here shares
// code with the library's algorithms.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "interlock/affiliation.hpp"
#include "interlock/graph.hpp"

namespace oracle {

using interlock::JournalGraph;
using interlock::VertexId;

inline std::vector<std::vector<bool>> adjacency_matrix(const JournalGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

/// Shortest s-t paths found by iterative deepening over simple paths.
/// Returns the geodesic length (0 if unreachable) and, for each vertex, how
/// many of the shortest paths pass through it as an interior vertex.
struct PairPaths {
  std::size_t length = 0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> through;
};

inline PairPaths enumerate_shortest_paths(const std::vector<std::vector<bool>>& adj,
                                          std::size_t s, std::size_t t) {
  const std::size_t n = adj.size();
  PairPaths out;
  out.through.assign(n, 0);
  std::vector<std::size_t> path{s};
  std::vector<bool> on_path(n, false);
  on_path[s] = true;
  for (std::size_t limit = 1; limit < n && out.count == 0; ++limit) {
    // Depth-first over simple paths of exactly `limit` edges.
    auto extend = [&](auto&& self) -> void {
      const std::size_t at = path.back();
      if (path.size() - 1 == limit) {
        if (at != t) return;
        ++out.count;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) ++out.through[path[i]];
        return;
      }
      if (at == t) return;
      for (std::size_t next = 0; next < n; ++next) {
        if (!adj[at][next] || on_path[next]) continue;
        on_path[next] = true;
        path.push_back(next);
        self(self);
        path.pop_back();
        on_path[next] = false;
      }
    };
    extend(extend);
    if (out.count) out.length = limit;
  }
  return out;
}

/// Sum over unordered pairs {s,t} not containing v of the fraction of s-t
/// geodesics through v, divided by (n-1)(n-2)/2.
inline std::vector<double> betweenness(const JournalGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto adj = adjacency_matrix(g);
  std::vector<double> out(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      const auto p = enumerate_shortest_paths(adj, s, t);
      if (p.count == 0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        out[v] += static_cast<double>(p.through[v]) / static_cast<double>(p.count);
      }
    }
  }
  const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  for (double& x : out) x /= pairs;
  return out;
}

/// Reachability by Warshall's transitive closure.
inline std::vector<std::vector<bool>> reachability(const JournalGraph& g) {
  auto r = adjacency_matrix(g);
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

/// Components as sorted member lists, ordered by size descending then by
/// smallest member.
inline std::vector<std::vector<VertexId>> components(const JournalGraph& g) {
  const auto r = reachability(g);
  std::set<std::vector<VertexId>> classes;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::vector<VertexId> members;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[i][j]) members.push_back(static_cast<VertexId>(j));
    }
    classes.insert(members);
  }
  std::vector<std::vector<VertexId>> out(classes.begin(), classes.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

/// Line values keyed by event pair (i < j): |board(i) ∩ board(j)|.
inline std::map<std::pair<VertexId, VertexId>, std::uint32_t> projection(
    const interlock::AffiliationNetwork& a) {
  std::vector<std::set<VertexId>> boards(a.event_count());
  for (const auto& seat : a.incidences()) boards[seat.event].insert(seat.actor);
  std::map<std::pair<VertexId, VertexId>, std::uint32_t> out;
  for (std::size_t i = 0; i < boards.size(); ++i) {
    for (std::size_t j = i + 1; j < boards.size(); ++j) {
      std::vector<VertexId> shared;
      std::set_intersection(boards[i].begin(), boards[i].end(), boards[j].begin(),
                            boards[j].end(), std::back_inserter(shared));
      if (!shared.empty()) {
        out[{static_cast<VertexId>(i), static_cast<VertexId>(j)}] =
            static_cast<std::uint32_t>(shared.size());
      }
    }
  }
  return out;
}

/// Textbook W for mid-ranks: 12 S / (m^2 (n^3 - n) - m sum T), S about
/// m(n+1)/2, T = sum (t^3 - t) over groups of equal ranks.
inline double kendall_w_textbook(const std::vector<std::vector<double>>& ranks, bool tie_correct) {
  const double m = static_cast<double>(ranks.size());
  const std::size_t n = ranks.front().size();
  const double nd = static_cast<double>(n);
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0;
    for (const auto& judge : ranks) sum += judge[i];
    s += (sum - m * (nd + 1) / 2) * (sum - m * (nd + 1) / 2);
  }
  double t = 0;
  for (const auto& judge : ranks) {
    std::map<double, double> groups;
    for (double r : judge) groups[r] += 1;
    for (const auto& [r, size] : groups) t += size * size * size - size;
  }
  double denom = m * m * (nd * nd * nd - nd);
  if (tie_correct) denom -= m * t;
  return 12 * s / denom;
}

}  // namespace oracle
