#pragma once

// Seeded random networks for tests, benchmarks and the `generate` command.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "interlock/affiliation.hpp"
#include "interlock/graph.hpp"

namespace interlock {

/// G(n, p) with line values uniform on 1..max_value. Labels are "v1".."vn".
inline JournalGraph random_graph(std::size_t n, double edge_probability, LineValue max_value,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  std::uniform_int_distribution<LineValue> value(1, max_value < 1 ? 1 : max_value);
  JournalGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v + 1));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), value(rng));
    }
  }
  return g;
}

/// Every (editor, journal) seat present independently with probability p.
/// All journals are registered even when their board is empty.
inline AffiliationNetwork random_affiliation(std::size_t editors, std::size_t journals,
                                             double seat_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(seat_probability);
  AffiliationNetwork a;
  for (std::size_t e = 0; e < editors; ++e) a.add_actor("editor " + std::to_string(e + 1));
  for (std::size_t j = 0; j < journals; ++j) a.add_event("journal " + std::to_string(j + 1));
  for (std::size_t e = 0; e < editors; ++e) {
    for (std::size_t j = 0; j < journals; ++j) {
      if (coin(rng)) a.add_incidence(static_cast<VertexId>(e), static_cast<VertexId>(j));
    }
  }
  return a;
}

}  // namespace interlock
