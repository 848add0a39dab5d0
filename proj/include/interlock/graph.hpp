#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "interlock/error.hpp"
#include "interlock/label.hpp"

namespace interlock {

/// Dense vertex index, contiguous in 0..n-1 within one graph.
using VertexId = std::uint32_t;

/// Line multiplicity: the number of shared editors. Always >= 1.
using LineValue = std::uint32_t;

struct Neighbor {
  VertexId id;
  LineValue value;
};

/// Undirected edge stored with `u < v`.
struct Edge {
  VertexId u;
  VertexId v;
  LineValue value;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected valued graph without self-loops or parallel edges.
///
/// Vertices are identified by label (NFC-normalized, trimmed) and addressed
/// by dense ids. Edges keep their insertion order; each edge appears once in
/// `edges()` and once in the adjacency list of each endpoint.
class JournalGraph {
 public:
  JournalGraph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  VertexId add_vertex(std::string_view label) {
    std::string key = normalize_label(label);
    if (index_.contains(key)) {
      throw Error(ErrorKind::duplicate_vertex,
                  "vertex \"" + key + "\" already present");
    }
    const auto id = static_cast<VertexId>(labels_.size());
    index_.emplace(key, id);
    labels_.push_back(std::move(key));
    adjacency_.emplace_back();
    return id;
  }

  void add_edge(VertexId u, VertexId v, LineValue value) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw Error(ErrorKind::self_loop,
                  "self-loop on vertex " + std::to_string(u));
    }
    if (value == 0) {
      throw Error(ErrorKind::invalid_value, "edge value must be positive");
    }
    if (u > v) std::swap(u, v);
    if (!edge_keys_.insert(key_of(u, v)).second) {
      throw Error(ErrorKind::duplicate_edge, "edge {" + std::to_string(u) +
                                                 "," + std::to_string(v) +
                                                 "} already present");
    }
    edges_.push_back({u, v, value});
    adjacency_[u].push_back({v, value});
    adjacency_[v].push_back({u, value});
  }

  bool has_edge(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return edge_keys_.contains(key_of(u, v));
  }

  std::span<const Neighbor> neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }

  const std::string& label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
  }

  std::span<const std::string> labels() const noexcept { return labels_; }

  /// Looks up a label after normalization; returns false when absent.
  bool find(std::string_view label, VertexId& out) const {
    auto it = index_.find(normalize_label(label));
    if (it == index_.end()) return false;
    out = it->second;
    return true;
  }

  /// Edges sorted by (u, v).
  std::vector<Edge> sorted_edges() const {
    std::vector<Edge> out(edges_.begin(), edges_.end());
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    return out;
  }

 private:
  static std::uint64_t key_of(VertexId u, VertexId v) noexcept {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  void check_vertex(VertexId v) const {
    if (v >= labels_.size()) {
      throw Error(ErrorKind::unknown_vertex,
                  "vertex id " + std::to_string(v) + " out of range (n=" +
                      std::to_string(labels_.size()) + ")");
    }
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

/// Copy of `g` with every vertex and only the edges for which `keep(edge)`
/// holds. Ids, labels and edge order are preserved.
template <typename Predicate>
JournalGraph subgraph_by_edges(const JournalGraph& g, Predicate&& keep) {
  JournalGraph out;
  for (const auto& label : g.labels()) out.add_vertex(label);
  for (const Edge& e : g.edges()) {
    if (keep(e)) out.add_edge(e.u, e.v, e.value);
  }
  return out;
}

/// Structural equality: same labels in the same order, same valued edge set.
inline bool same_graph(const JournalGraph& a, const JournalGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (!std::equal(a.labels().begin(), a.labels().end(), b.labels().begin())) {
    return false;
  }
  return a.sorted_edges() == b.sorted_edges();
}

}  // namespace interlock
