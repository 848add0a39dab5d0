#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "interlock/centrality.hpp"
#include "interlock/fixtures.hpp"
#include "interlock/graph.hpp"
#include "interlock/ranking.hpp"
#include "interlock/text.hpp"

namespace interlock {

struct CentralityRow {
  std::string label;
  std::size_t degree = 0;
  double normalized_degree = 0;
  double closeness = 0;
  double betweenness = 0;  // in [0, 1]
  std::int64_t rank_degree = 0;
  std::int64_t rank_closeness = 0;
  std::int64_t rank_betweenness = 0;
};

/// Per-vertex centrality table in vertex-id order.
struct CentralityReport {
  std::vector<CentralityRow> rows;

  std::size_t size() const noexcept { return rows.size(); }

  std::vector<double> degrees() const {
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(static_cast<double>(r.degree));
    return out;
  }
  std::vector<double> closeness() const {
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(r.closeness);
    return out;
  }
  std::vector<double> betweenness() const {
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(r.betweenness);
    return out;
  }

  /// Per-journal table columns; 3 decimals, betweenness printed x100.
  std::string to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < kTableA1Columns.size(); ++i) {
      if (i) out += ',';
      out += kTableA1Columns[i];
    }
    out += '\n';
    for (const auto& r : rows) {
      out += text::csv_field(r.label);
      out += ',' + std::to_string(r.degree);
      out += ',' + text::fixed(r.normalized_degree, 3);
      out += ',' + std::to_string(r.rank_degree);
      out += ',' + text::fixed(r.closeness, 3);
      out += ',' + std::to_string(r.rank_closeness);
      out += ',' + text::fixed(100.0 * r.betweenness, 3);
      out += ',' + std::to_string(r.rank_betweenness);
      out += '\n';
    }
    return out;
  }
};

/// Values are snapped to a 1e-12 grid before ranking so that vertices with
/// mathematically equal scores share a rank despite rounding noise.
inline std::vector<std::int64_t> snapped_competition_ranks(std::span<const double> values) {
  std::vector<std::int64_t> snapped;
  snapped.reserve(values.size());
  for (double v : values) snapped.push_back(std::llround(v * 1e12));
  return competition_ranks<std::int64_t>(snapped);
}

inline CentralityReport centrality_report(const JournalGraph& g,
                                          ClosenessVariant variant = ClosenessVariant::corrected,
                                          std::size_t workers = 1) {
  const auto degree = degree_centrality(g);
  const auto closeness = closeness_centrality(g, variant, workers);
  const auto betweenness = betweenness_centrality(g, workers);
  CentralityReport report;
  report.rows.resize(g.vertex_count());
  std::vector<std::size_t> degrees(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto& row = report.rows[v];
    row.label = g.labels()[v];
    row.degree = degree[v].degree;
    row.normalized_degree = degree[v].normalized;
    row.closeness = closeness[v];
    row.betweenness = betweenness[v];
    degrees[v] = degree[v].degree;
  }
  const auto rd = competition_ranks<std::size_t>(degrees);
  const auto rc = snapped_competition_ranks(closeness);
  const auto rb = snapped_competition_ranks(betweenness);
  for (std::size_t v = 0; v < report.rows.size(); ++v) {
    report.rows[v].rank_degree = rd[v];
    report.rows[v].rank_closeness = rc[v];
    report.rows[v].rank_betweenness = rb[v];
  }
  return report;
}

/// Rebuilds a report from rows in the per-journal table layout (a fixture or
/// a previously written `centrality.csv`). Betweenness is divided by 100.
inline CentralityReport report_from_rows(std::span<const FixtureRowA1> rows) {
  CentralityReport report;
  for (const auto& f : rows) {
    CentralityRow r;
    r.label = f.journal;
    r.degree = static_cast<std::size_t>(f.degree);
    r.normalized_degree = f.normalized_degree;
    r.closeness = f.closeness;
    r.betweenness = f.betweenness_x100 / 100.0;
    r.rank_degree = f.rank_degree;
    r.rank_closeness = f.rank_closeness;
    r.rank_betweenness = f.rank_betweenness;
    report.rows.push_back(std::move(r));
  }
  return report;
}

}  // namespace interlock
