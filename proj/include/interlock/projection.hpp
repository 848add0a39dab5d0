#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "interlock/affiliation.hpp"
#include "interlock/distribution.hpp"
#include "interlock/error.hpp"
#include "interlock/graph.hpp"
#include "interlock/text.hpp"

namespace interlock {

/// One-mode journal network: one vertex per event in insertion order; two
/// journals are joined iff they share an editor, the line value being the
/// number of shared editors. Journals without interlocks stay as isolates.
inline JournalGraph project(const AffiliationNetwork& a) {
  JournalGraph g;
  for (const auto& label : a.event_labels()) g.add_vertex(label);

  std::unordered_map<std::uint64_t, LineValue> shared;
  std::vector<VertexId> boards;
  for (std::size_t actor = 0; actor < a.actor_count(); ++actor) {
    const auto span = a.boards_of(static_cast<VertexId>(actor));
    boards.assign(span.begin(), span.end());
    std::sort(boards.begin(), boards.end());
    for (std::size_t i = 0; i < boards.size(); ++i) {
      for (std::size_t j = i + 1; j < boards.size(); ++j) {
        ++shared[(static_cast<std::uint64_t>(boards[i]) << 32) | boards[j]];
      }
    }
  }
  std::vector<std::pair<std::uint64_t, LineValue>> lines(shared.begin(), shared.end());
  std::sort(lines.begin(), lines.end());
  for (const auto& [key, value] : lines) {
    g.add_edge(static_cast<VertexId>(key >> 32),
               static_cast<VertexId>(key & 0xffffffffu), value);
  }
  return g;
}

struct NetworkSummary {
  std::size_t journals = 0;
  std::size_t editors = 0;
  std::size_t seats = 0;
  double mean_seats_per_journal = 0;
  double mean_participation = 0;
  std::size_t lines = 0;
  double density = 0;
  double mean_degree = 0;
  double median_degree = 0;
  double degree_sd = 0;

  /// Header plus one data row.
  std::string to_csv() const {
    std::string out =
        "journals,editors,seats,mean_seats_per_journal,mean_participation,"
        "lines,density,mean_degree,median_degree,degree_sd\n";
    out += std::to_string(journals) + ',' + std::to_string(editors) + ',' +
           std::to_string(seats) + ',' + text::fixed(mean_seats_per_journal, 4) +
           ',' + text::fixed(mean_participation, 4) + ',' +
           std::to_string(lines) + ',' + text::fixed(density, 4) + ',' +
           text::fixed(mean_degree, 4) + ',' + text::fixed(median_degree, 4) +
           ',' + text::fixed(degree_sd, 4) + '\n';
    return out;
  }
};

/// Degree statistics of a degree sequence: mean, lower-middle median and
/// population standard deviation.
struct DegreeMoments {
  double mean = 0;
  double median = 0;
  double sd = 0;
};

template <typename Int>
DegreeMoments degree_moments(std::vector<Int> degrees) {
  DegreeMoments m;
  if (degrees.empty()) return m;
  const double n = static_cast<double>(degrees.size());
  double sum = 0;
  for (Int d : degrees) sum += static_cast<double>(d);
  m.mean = sum / n;
  double ss = 0;
  for (Int d : degrees) {
    const double dev = static_cast<double>(d) - m.mean;
    ss += dev * dev;
  }
  m.sd = std::sqrt(ss / n);
  const std::size_t mid = (degrees.size() - 1) / 2;
  std::nth_element(degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(mid),
                   degrees.end());
  m.median = static_cast<double>(degrees[mid]);
  return m;
}

/// Density of an undirected graph with `lines` edges on `n` vertices.
inline double density(std::size_t lines, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::degenerate_network, "density needs at least 2 journals");
  return static_cast<double>(lines) /
         (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

/// Whole-network statistics; `g` must be the projection of `a`.
inline NetworkSummary summarize(const AffiliationNetwork& a, const JournalGraph& g) {
  if (g.vertex_count() != a.event_count()) {
    throw Error(ErrorKind::invalid_argument,
                "graph is not the projection of the affiliation network");
  }
  NetworkSummary s;
  s.journals = g.vertex_count();
  s.editors = a.actor_count();
  s.seats = a.seat_count();
  s.lines = g.edge_count();
  s.density = density(s.lines, s.journals);
  s.mean_seats_per_journal =
      static_cast<double>(s.seats) / static_cast<double>(s.journals);
  s.mean_participation = a.participation_rate();
  std::vector<std::size_t> degrees(g.vertex_count());
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    degrees[v] = g.degree(static_cast<VertexId>(v));
  }
  const auto m = degree_moments(std::move(degrees));
  s.mean_degree = m.mean;
  s.median_degree = m.median;
  s.degree_sd = m.sd;
  return s;
}

inline DistributionTable degree_distribution(const JournalGraph& g) {
  std::vector<std::size_t> degrees(g.vertex_count());
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    degrees[v] = g.degree(static_cast<VertexId>(v));
  }
  return tabulate<std::size_t>(degrees);
}

inline DistributionTable line_value_distribution(const JournalGraph& g) {
  std::vector<LineValue> values;
  values.reserve(g.edge_count());
  for (const Edge& e : g.edges()) values.push_back(e.value);
  return tabulate<LineValue>(values);
}

}  // namespace interlock
