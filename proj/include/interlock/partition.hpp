#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "interlock/graph.hpp"

namespace interlock {

using ComponentId = std::uint32_t;

/// Vertex -> component assignment. Component ids are ordered by decreasing
/// size, ties broken by the smallest member vertex id, so id 0 is a largest
/// component whenever the graph has vertices.
struct ComponentPartition {
  std::vector<ComponentId> assignment;
  std::vector<std::size_t> sizes;

  std::size_t vertex_count() const noexcept { return assignment.size(); }
  std::size_t component_count() const noexcept { return sizes.size(); }
  ComponentId giant() const noexcept { return 0; }
  std::size_t giant_size() const noexcept { return sizes.empty() ? 0 : sizes[0]; }

  /// Members of each component, ascending vertex id.
  std::vector<std::vector<VertexId>> members() const {
    std::vector<std::vector<VertexId>> out(sizes.size());
    for (std::size_t v = 0; v < assignment.size(); ++v) {
      out[assignment[v]].push_back(static_cast<VertexId>(v));
    }
    return out;
  }
};

}  // namespace interlock
