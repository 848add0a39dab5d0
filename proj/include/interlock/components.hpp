#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "interlock/graph.hpp"
#include "interlock/partition.hpp"

namespace interlock {

/// Connected components, edge values ignored. Component ids follow
/// decreasing size, ties by smallest member id.
inline ComponentPartition components(const JournalGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr ComponentId kUnset = static_cast<ComponentId>(-1);
  std::vector<ComponentId> provisional(n, kUnset);
  std::vector<std::size_t> sizes;
  std::vector<VertexId> min_member;
  std::vector<VertexId> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (provisional[root] != kUnset) continue;
    const auto cid = static_cast<ComponentId>(sizes.size());
    std::size_t size = 0;
    provisional[root] = cid;
    stack.push_back(static_cast<VertexId>(root));
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++size;
      for (const Neighbor& nb : g.neighbors(v)) {
        if (provisional[nb.id] == kUnset) {
          provisional[nb.id] = cid;
          stack.push_back(nb.id);
        }
      }
    }
    sizes.push_back(size);
    // Roots are scanned in increasing id order, so the root is the minimum.
    min_member.push_back(static_cast<VertexId>(root));
  }

  std::vector<ComponentId> order(sizes.size());
  std::iota(order.begin(), order.end(), ComponentId{0});
  std::sort(order.begin(), order.end(), [&](ComponentId a, ComponentId b) {
    if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
    return min_member[a] < min_member[b];
  });
  std::vector<ComponentId> final_id(sizes.size());
  ComponentPartition p;
  p.sizes.resize(sizes.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    final_id[order[k]] = static_cast<ComponentId>(k);
    p.sizes[k] = sizes[order[k]];
  }
  p.assignment.resize(n);
  for (std::size_t v = 0; v < n; ++v) p.assignment[v] = final_id[provisional[v]];
  return p;
}

}  // namespace interlock
