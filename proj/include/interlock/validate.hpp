#pragma once

// Replays the published tables (per-journal centralities, degree and line
// value distributions) and the published whole-network statistics.
//
// The raw editor-board data behind those tables is not public, so this
// recomputes everything derivable from the tables themselves and compares
// against the published figures within declared tolerances.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "interlock/centrality.hpp"
#include "interlock/concordance.hpp"
#include "interlock/error.hpp"
#include "interlock/fixtures.hpp"
#include "interlock/projection.hpp"
#include "interlock/ranking.hpp"
#include "interlock/report.hpp"
#include "interlock/text.hpp"

namespace interlock {

/// Figures printed alongside the tables.
namespace published {
inline constexpr std::size_t journals = 746;
inline constexpr std::size_t lines = 6407;
inline constexpr std::size_t seats = 21525;
inline constexpr std::size_t scholars = 15921;
inline constexpr double seats_per_journal = 28.9;
inline constexpr double participation = 1.35;
inline constexpr double density = 0.023;
inline constexpr double mean_degree = 17.18;
inline constexpr double median_degree = 11;
inline constexpr double degree_sd = 17.55;
inline constexpr double degree_centralization = 0.14;
inline constexpr double closeness_centralization = 0.29;
inline constexpr double betweenness_centralization = 0.04;
inline constexpr double kendall_w = 0.95;
inline constexpr std::size_t max_degree = 124;
inline constexpr std::size_t isolated = 74;
inline constexpr std::int64_t isolated_rank = 673;
inline constexpr std::size_t value_one_lines = 4780;
inline constexpr double value_one_pct = 74.61;
inline constexpr std::size_t max_line_value = 40;
}  // namespace published

struct Check {
  enum class Status { pass, fail, info };
  std::string name;
  Status status;
  std::string detail;

  std::string line() const {
    const char* tag = status == Status::pass ? "PASS" : status == Status::fail ? "FAIL" : "INFO";
    return std::string(tag) + "  " + name + "  " + detail;
  }
};

struct ValidationReport {
  std::vector<Check> checks;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.status == Check::Status::fail; });
  }

  std::string text() const {
    std::string out;
    for (const auto& c : checks) out += c.line() + '\n';
    return out;
  }
};

/// Rows whose printed rank is inconsistent with the printed (rounded)
/// values: a rank computed from unrounded values must lie inside the block
/// [1 + #greater, #greater-or-equal] of its rounded value.
inline std::size_t rank_rounding_violations(std::span<const double> printed_values,
                                            std::span<const std::int64_t> printed_ranks) {
  std::vector<double> sorted(printed_values.begin(), printed_values.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t bad = 0;
  for (std::size_t i = 0; i < printed_values.size(); ++i) {
    const double v = printed_values[i];
    const auto below = std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    const auto upto = std::upper_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    const auto n = static_cast<std::int64_t>(sorted.size());
    const std::int64_t lo = 1 + (n - upto);
    const std::int64_t hi = n - below;
    if (printed_ranks[i] < lo || printed_ranks[i] > hi) ++bad;
  }
  return bad;
}

/// Rows whose printed rank differs from the competition rank of the printed
/// values.
inline std::size_t rank_mismatches(std::span<const double> printed_values,
                                   std::span<const std::int64_t> printed_ranks) {
  const auto recomputed = competition_ranks(printed_values);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < recomputed.size(); ++i) bad += recomputed[i] != printed_ranks[i];
  return bad;
}

/// Column views over the per-journal table.
struct TableA1Columns {
  std::vector<double> degree, normalized, closeness, betweenness;  // betweenness in [0,1]
  std::vector<double> betweenness_x100;
  std::vector<std::int64_t> rank_degree, rank_closeness, rank_betweenness;

  explicit TableA1Columns(std::span<const FixtureRowA1> rows) {
    for (const auto& r : rows) {
      degree.push_back(static_cast<double>(r.degree));
      normalized.push_back(r.normalized_degree);
      closeness.push_back(r.closeness);
      betweenness_x100.push_back(r.betweenness_x100);
      betweenness.push_back(r.betweenness_x100 / 100.0);
      rank_degree.push_back(r.rank_degree);
      rank_closeness.push_back(r.rank_closeness);
      rank_betweenness.push_back(r.rank_betweenness);
    }
  }
};

namespace validate_detail {

inline std::ifstream open_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "missing fixture file " + path.string());
  return in;
}

inline Check within(std::string name, double value, double target, double tol, int decimals = 4) {
  const bool ok = std::fabs(value - target) <= tol;
  return {std::move(name), ok ? Check::Status::pass : Check::Status::fail,
          text::fixed(value, decimals) + " vs " + text::shortest(target) + " +/- " +
              text::shortest(tol)};
}

inline Check exact(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? Check::Status::pass : Check::Status::fail, std::move(detail)};
}

inline Check info(std::string name, std::string detail) {
  return {std::move(name), Check::Status::info, std::move(detail)};
}

}  // namespace validate_detail

inline ValidationReport validate_table_a1(std::span<const FixtureRowA1> rows) {
  using namespace validate_detail;
  ValidationReport r;
  const TableA1Columns col(rows);
  const std::size_t n = rows.size();
  r.checks.push_back(exact("a1.row_count", n == published::journals,
                           std::to_string(n) + " rows, expected " +
                               std::to_string(published::journals)));
  if (n < 3) return r;

  std::size_t bad_norm = 0;
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = std::fabs(col.normalized[i] - col.degree[i] / static_cast<double>(n - 1));
    worst = std::max(worst, dev);
    if (dev > 0.0005) ++bad_norm;
  }
  r.checks.push_back(exact("a1.normalized_degree", bad_norm == 0,
                           std::to_string(bad_norm) + " rows off by > 0.0005 (max " +
                               text::fixed(worst, 6) + ")"));

  const std::size_t deg_mismatch = rank_mismatches(col.degree, col.rank_degree);
  r.checks.push_back(exact("a1.rank_degree", deg_mismatch == 0,
                           std::to_string(deg_mismatch) + " rows differ from recomputed ranks"));
  const std::size_t clo_bad = rank_rounding_violations(col.closeness, col.rank_closeness);
  r.checks.push_back(exact("a1.rank_closeness_consistent", clo_bad == 0,
                           std::to_string(clo_bad) +
                               " rows outside the tie block of their rounded value"));
  const std::size_t bet_bad = rank_rounding_violations(col.betweenness_x100, col.rank_betweenness);
  r.checks.push_back(exact("a1.rank_betweenness_consistent", bet_bad == 0,
                           std::to_string(bet_bad) +
                               " rows outside the tie block of their rounded value"));

  const auto top = std::find_if(rows.begin(), rows.end(), [](const FixtureRowA1& row) {
    return row.journal == "Pacific Economic Review";
  });
  const bool top_ok = top != rows.end() && top->degree == 124 && top->rank_degree == 1 &&
                      top->rank_closeness == 1 && top->rank_betweenness == 1;
  r.checks.push_back(exact("a1.anchor_top_journal", top_ok,
                           "Pacific Economic Review degree 124, ranks 1/1/1"));

  std::size_t isolated = 0, isolated_ranked = 0;
  for (const auto& row : rows) {
    if (row.degree != 0) continue;
    ++isolated;
    isolated_ranked += row.rank_degree == published::isolated_rank;
  }
  r.checks.push_back(exact("a1.isolated_rank",
                           isolated == published::isolated && isolated_ranked == isolated,
                           std::to_string(isolated) + " isolated journals, " +
                               std::to_string(isolated_ranked) + " at rank 673"));

  std::int64_t degree_sum = 0;
  for (const auto& row : rows) degree_sum += row.degree;
  r.checks.push_back(exact("a1.degree_sum", degree_sum == 2 * static_cast<std::int64_t>(published::lines),
                           "sum of degrees " + std::to_string(degree_sum) + " = 2 x " +
                               std::to_string(published::lines) + " lines"));

  const double cd = degree_centralization<double>(col.degree);
  r.checks.push_back(within("degree_centralization", cd, published::degree_centralization, 0.005));
  const double cd_counts =
      (static_cast<double>(published::journals) * static_cast<double>(published::max_degree) -
       2.0 * static_cast<double>(published::lines)) /
      (static_cast<double>(published::journals - 1) * static_cast<double>(published::journals - 2));
  r.checks.push_back(within("degree_centralization_from_counts", cd_counts,
                            published::degree_centralization, 0.005));
  const double cb = betweenness_centralization(col.betweenness);
  r.checks.push_back(
      within("betweenness_centralization", cb, published::betweenness_centralization, 0.005));

  // Component membership is not in the table, so closeness centralization
  // can only be approximated from the connected rows.
  std::vector<double> connected;
  for (const auto& row : rows) {
    if (row.degree > 0) connected.push_back(row.closeness);
  }
  r.checks.push_back(info("closeness_centralization",
                          "all rows " + text::fixed(closeness_centralization(col.closeness), 4) +
                              ", non-isolated rows " +
                              text::fixed(closeness_centralization(connected), 4) +
                              ", published " + text::shortest(published::closeness_centralization)));

  const auto conc = centrality_concordance(report_from_rows(rows));
  r.checks.push_back(within("kendall_w", conc.w, published::kendall_w, 0.01));
  r.checks.push_back(info("kendall_w_variants",
                          "uncorrected " + text::fixed(conc.w_uncorrected, 4) +
                              ", competition ranks " + text::fixed(conc.w_competition, 4)));

  std::vector<std::int64_t> degrees;
  for (const auto& row : rows) degrees.push_back(row.degree);
  const auto moments = degree_moments(degrees);
  r.checks.push_back(exact("median_degree", moments.median == published::median_degree,
                           text::fixed(moments.median, 1) + " (lower middle)"));
  r.checks.push_back(within("mean_degree_from_table", moments.mean, published::mean_degree, 0.005));
  r.checks.push_back(info("degree_sd", "population " + text::fixed(moments.sd, 3) +
                                           ", published " + text::shortest(published::degree_sd)));
  return r;
}

inline ValidationReport validate_published_counts() {
  using namespace validate_detail;
  ValidationReport r;
  r.checks.push_back(within("density_from_counts", density(published::lines, published::journals),
                            published::density, 0.0005));
  r.checks.push_back(within("mean_degree_from_counts",
                            2.0 * static_cast<double>(published::lines) /
                                static_cast<double>(published::journals),
                            published::mean_degree, 0.005));
  r.checks.push_back(within("seats_per_journal",
                            static_cast<double>(published::seats) /
                                static_cast<double>(published::journals),
                            published::seats_per_journal, 0.05));
  r.checks.push_back(within("participation_rate",
                            static_cast<double>(published::seats) /
                                static_cast<double>(published::scholars),
                            published::participation, 0.005));
  return r;
}

/// Frequency table checks: population size, recomputed percentages.
inline void check_distribution(ValidationReport& r, const std::string& prefix,
                               std::span<const FixtureDistributionRow> rows,
                               std::size_t population, double pct_tolerance) {
  using namespace validate_detail;
  std::int64_t total = 0;
  for (const auto& row : rows) total += row.freq;
  r.checks.push_back(exact(prefix + ".total", total == static_cast<std::int64_t>(population),
                           "sum of frequencies " + std::to_string(total) + ", expected " +
                               std::to_string(population)));
  std::size_t bad = 0, with_pct = 0;
  bool increasing = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i && rows[i].value <= rows[i - 1].value) increasing = false;
    if (!rows[i].freq_pct) continue;
    ++with_pct;
    const double pct = 100.0 * static_cast<double>(rows[i].freq) / static_cast<double>(total);
    if (std::fabs(pct - *rows[i].freq_pct) > pct_tolerance) ++bad;
  }
  r.checks.push_back(exact(prefix + ".values_increasing", increasing, "row values strictly increasing"));
  r.checks.push_back(exact(prefix + ".percentages", bad == 0,
                           std::to_string(bad) + " of " + std::to_string(with_pct) +
                               " percentages off by > " + text::shortest(pct_tolerance)));
}

/// Runs every check against `table_a1.csv`, `table_1.csv` and `table_3.csv`
/// in `dir`. Throws IoError naming a missing file.
inline ValidationReport validate_fixtures(const std::filesystem::path& dir) {
  using namespace validate_detail;
  auto a1_in = open_fixture(dir / "table_a1.csv");
  auto t1_in = open_fixture(dir / "table_1.csv");
  auto t3_in = open_fixture(dir / "table_3.csv");
  const auto a1 = read_fixture_a1(a1_in);
  const auto t1 = read_fixture_distribution(t1_in, "degree");
  const auto t3 = read_fixture_distribution(t3_in, "line_value");

  ValidationReport r = validate_table_a1(a1);
  for (auto& c : validate_published_counts().checks) r.checks.push_back(std::move(c));

  check_distribution(r, "table1", t1, published::journals, 0.05);
  std::vector<std::int64_t> degrees;
  for (const auto& row : a1) degrees.push_back(row.degree);
  const auto recomputed = tabulate<std::int64_t>(degrees);
  bool same = recomputed.rows.size() == t1.size();
  for (std::size_t i = 0; same && i < t1.size(); ++i) {
    same = recomputed.rows[i].value == t1[i].value &&
           static_cast<std::int64_t>(recomputed.rows[i].freq) == t1[i].freq;
  }
  r.checks.push_back(exact("table1.matches_a1_degrees", same,
                           "degree distribution of the per-journal table equals the frequency table"));
  const auto zero = std::find_if(t1.begin(), t1.end(), [](const auto& row) { return row.value == 0; });
  r.checks.push_back(exact("table1.isolated_row",
                           zero != t1.end() && zero->freq == 74 && zero->freq_pct &&
                               std::fabs(*zero->freq_pct - 9.9) < 1e-9,
                           "degree 0: 74 journals, 9.9%"));

  check_distribution(r, "table3", t3, published::lines, 0.05);
  const auto one = std::find_if(t3.begin(), t3.end(), [](const auto& row) { return row.value == 1; });
  if (one != t3.end()) {
    r.checks.push_back(within("table3.value_one_share",
                              100.0 * static_cast<double>(one->freq) /
                                  static_cast<double>(published::lines),
                              published::value_one_pct, 0.05, 2));
  } else {
    r.checks.push_back(exact("table3.value_one_share", false, "no row for line value 1"));
  }
  const std::int64_t max_value = t3.empty() ? 0 : t3.back().value;
  r.checks.push_back(exact("table3.max_line_value",
                           max_value == static_cast<std::int64_t>(published::max_line_value),
                           "maximum line value " + std::to_string(max_value)));
  return r;
}

}  // namespace interlock
