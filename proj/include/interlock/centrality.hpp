#pragma once

// Degree, closeness and betweenness centrality on the binary structure of a
// JournalGraph (line values are ignored: every line has length 1), plus
// Freeman centralization indices.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "interlock/components.hpp"
#include "interlock/error.hpp"
#include "interlock/graph.hpp"
#include "interlock/parallel.hpp"
#include "interlock/text.hpp"

namespace interlock {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct DegreeScore {
  std::size_t degree = 0;
  double normalized = 0;
};

/// Number of distinct neighbours, and the same divided by n-1.
inline std::vector<DegreeScore> degree_centrality(const JournalGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorKind::degenerate_network, "degree centrality needs n >= 2");
  std::vector<DegreeScore> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    out[v].degree = g.degree(static_cast<VertexId>(v));
    out[v].normalized = static_cast<double>(out[v].degree) / static_cast<double>(n - 1);
  }
  return out;
}

namespace centrality_detail {

/// Reusable single-source BFS state.
struct Bfs {
  std::vector<std::uint32_t> dist;
  std::vector<double> sigma;
  std::vector<VertexId> order;  // vertices in non-decreasing distance

  explicit Bfs(std::size_t n) : dist(n, kUnreachable), sigma(n, 0.0) { order.reserve(n); }

  /// Distances and shortest-path counts from `source`.
  void run(const JournalGraph& g, VertexId source, bool count_paths) {
    for (VertexId v : order) {
      dist[v] = kUnreachable;
      sigma[v] = 0.0;
    }
    order.clear();
    dist[source] = 0;
    sigma[source] = 1.0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const VertexId v = order[head];
      const std::uint32_t next = dist[v] + 1;
      for (const Neighbor& nb : g.neighbors(v)) {
        const VertexId w = nb.id;
        if (dist[w] == kUnreachable) {
          dist[w] = next;
          order.push_back(w);
        }
        if (count_paths && dist[w] == next) sigma[w] += sigma[v];
      }
    }
  }
};

}  // namespace centrality_detail

/// Dense all-pairs table of geodesic lengths and geodesic counts.
/// Memory is O(n^2); intended for small and medium graphs.
class GeodesicTable {
 public:
  explicit GeodesicTable(std::size_t n) : n_(n), dist_(n * n, kUnreachable), paths_(n * n, 0.0) {}

  std::size_t vertex_count() const noexcept { return n_; }
  /// kUnreachable when t cannot be reached from s.
  std::uint32_t distance(VertexId s, VertexId t) const { return dist_[s * n_ + t]; }
  /// Number of distinct geodesics; 0 when unreachable, 1 for s == t.
  double path_count(VertexId s, VertexId t) const { return paths_[s * n_ + t]; }

 private:
  friend GeodesicTable all_pairs_geodesics(const JournalGraph&, std::size_t);
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
  std::vector<double> paths_;
};

inline GeodesicTable all_pairs_geodesics(const JournalGraph& g, std::size_t workers = 1) {
  const std::size_t n = g.vertex_count();
  GeodesicTable table(n);
  parallel_for(n, workers, [&](std::size_t s) {
    centrality_detail::Bfs bfs(n);
    bfs.run(g, static_cast<VertexId>(s), true);
    for (VertexId t : bfs.order) {
      table.dist_[s * n + t] = bfs.dist[t];
      table.paths_[s * n + t] = bfs.sigma[t];
    }
  });
  return table;
}

enum class ClosenessVariant {
  /// reachable / sum of distances to the reachable vertices.
  verbal,
  /// verbal value scaled by the reachable fraction reachable / (n-1).
  corrected,
};

/// Closeness of every vertex; 0 for isolates. Both variants coincide with
/// (n-1)/S on a connected graph.
inline std::vector<double> closeness_centrality(const JournalGraph& g,
                                                ClosenessVariant variant = ClosenessVariant::corrected,
                                                std::size_t workers = 1) {
  const std::size_t n = g.vertex_count();
  std::vector<double> out(n, 0.0);
  parallel_for(n, workers, [&](std::size_t s) {
    centrality_detail::Bfs bfs(n);
    bfs.run(g, static_cast<VertexId>(s), false);
    const std::size_t reached = bfs.order.size() - 1;
    if (reached == 0) return;
    std::uint64_t total = 0;
    for (VertexId t : bfs.order) total += bfs.dist[t];
    const double r = static_cast<double>(reached);
    double c = r / static_cast<double>(total);
    if (variant == ClosenessVariant::corrected) c *= r / static_cast<double>(n - 1);
    out[s] = c;
  });
  return out;
}

/// Normalized betweenness: the share of geodesics between pairs of other
/// vertices passing through each vertex, divided by (n-1)(n-2)/2 pairs.
///
/// Dependencies are accumulated per source over the BFS DAG. Sources are cut
/// into a fixed number of contiguous blocks (a function of n only); each
/// block sums its sources in order and blocks are reduced in block order,
/// so results do not depend on `workers`.
inline std::vector<double> betweenness_centrality(const JournalGraph& g, std::size_t workers = 1) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw Error(ErrorKind::degenerate_network, "betweenness needs n >= 3");
  const std::size_t blocks = std::min<std::size_t>(n, 64);
  std::vector<std::vector<double>> partial(blocks);
  parallel_for(blocks, workers, [&](std::size_t b) {
    std::vector<double>& acc = partial[b];
    acc.assign(n, 0.0);
    centrality_detail::Bfs bfs(n);
    std::vector<double> delta(n, 0.0);
    const std::size_t first = b * n / blocks;
    const std::size_t last = (b + 1) * n / blocks;
    for (std::size_t s = first; s < last; ++s) {
      bfs.run(g, static_cast<VertexId>(s), true);
      for (VertexId v : bfs.order) delta[v] = 0.0;
      for (auto it = bfs.order.rbegin(); it != bfs.order.rend(); ++it) {
        const VertexId w = *it;
        if (bfs.dist[w] == 0) continue;
        const double share = (1.0 + delta[w]) / bfs.sigma[w];
        for (const Neighbor& nb : g.neighbors(w)) {
          if (bfs.dist[nb.id] + 1 == bfs.dist[w]) delta[nb.id] += bfs.sigma[nb.id] * share;
        }
        acc[w] += delta[w];
      }
    }
  });
  std::vector<double> out(n, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t v = 0; v < n; ++v) out[v] += partial[b][v];
  }
  // Each unordered pair was counted from both ends.
  const double pairs2 = static_cast<double>(n - 1) * static_cast<double>(n - 2);
  for (double& x : out) x /= pairs2;
  return out;
}

/// Freeman degree centralization: sum(d_max - d_v) / ((n-1)(n-2)).
template <typename Int>
double degree_centralization(std::span<const Int> degrees) {
  const std::size_t n = degrees.size();
  if (n < 3) throw Error(ErrorKind::degenerate_network, "centralization needs n >= 3");
  const double dmax = static_cast<double>(*std::max_element(degrees.begin(), degrees.end()));
  double sum = 0;
  for (Int d : degrees) sum += dmax - static_cast<double>(d);
  return sum / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

/// Freeman closeness centralization of standardized closeness values of a
/// connected network: sum(c_max - c_v) / ((n-2)(n-1)/(2n-3)).
inline double closeness_centralization(std::span<const double> closeness) {
  const std::size_t n = closeness.size();
  if (n < 3) throw Error(ErrorKind::degenerate_network, "centralization needs n >= 3");
  const double cmax = *std::max_element(closeness.begin(), closeness.end());
  double sum = 0;
  for (double c : closeness) sum += cmax - c;
  const double nd = static_cast<double>(n);
  return sum / ((nd - 2.0) * (nd - 1.0) / (2.0 * nd - 3.0));
}

/// Freeman betweenness centralization of normalized betweenness values:
/// sum(b_max - b_v) / (n-1).
inline double betweenness_centralization(std::span<const double> betweenness) {
  const std::size_t n = betweenness.size();
  if (n < 3) throw Error(ErrorKind::degenerate_network, "centralization needs n >= 3");
  const double bmax = *std::max_element(betweenness.begin(), betweenness.end());
  double sum = 0;
  for (double b : betweenness) sum += bmax - b;
  return sum / static_cast<double>(n - 1);
}

struct CentralizationIndices {
  double degree_centralization = 0;
  double closeness_centralization = 0;
  double betweenness_centralization = 0;
  /// Size of the largest component on which closeness centralization is taken.
  std::size_t closeness_subnetwork_size = 0;

  /// Header plus one data row, 4 decimals.
  std::string to_csv() const {
    return "degree_centralization,closeness_centralization,betweenness_centralization,"
           "closeness_subnetwork_size\n" +
           text::fixed(degree_centralization, 4) + ',' + text::fixed(closeness_centralization, 4) +
           ',' + text::fixed(betweenness_centralization, 4) + ',' +
           std::to_string(closeness_subnetwork_size) + '\n';
  }
};

/// Closeness of the members of the largest component, measured within it.
inline std::vector<double> giant_component_closeness(const JournalGraph& g,
                                                     const ComponentPartition& parts,
                                                     std::size_t workers = 1) {
  std::vector<VertexId> members;
  for (std::size_t v = 0; v < parts.vertex_count(); ++v) {
    if (parts.assignment[v] == parts.giant()) members.push_back(static_cast<VertexId>(v));
  }
  const std::size_t n = g.vertex_count();
  std::vector<double> out(members.size(), 0.0);
  parallel_for(members.size(), workers, [&](std::size_t i) {
    centrality_detail::Bfs bfs(n);
    bfs.run(g, members[i], false);
    std::uint64_t total = 0;
    for (VertexId t : bfs.order) total += bfs.dist[t];
    const std::size_t reached = bfs.order.size() - 1;
    out[i] = reached == 0 ? 0.0 : static_cast<double>(reached) / static_cast<double>(total);
  });
  return out;
}

/// Degree and betweenness centralization over the full graph; closeness
/// centralization over the largest component. A largest component with
/// fewer than 3 vertices has closeness centralization 0.
inline CentralizationIndices centralization(const JournalGraph& g, std::size_t workers = 1) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw Error(ErrorKind::degenerate_network, "centralization needs n >= 3");
  CentralizationIndices out;
  std::vector<std::size_t> degrees(n);
  for (std::size_t v = 0; v < n; ++v) degrees[v] = g.degree(static_cast<VertexId>(v));
  out.degree_centralization = degree_centralization<std::size_t>(degrees);

  const auto parts = components(g);
  out.closeness_subnetwork_size = parts.giant_size();
  if (parts.giant_size() >= 3) {
    const auto c = giant_component_closeness(g, parts, workers);
    out.closeness_centralization = closeness_centralization(c);
  }
  const auto b = betweenness_centrality(g, workers);
  out.betweenness_centralization = betweenness_centralization(b);
  return out;
}

}  // namespace interlock
