#pragma once

// Rank agreement between centrality rankings: Kendall's tau-b for pairs of
// rankings and Kendall's coefficient of concordance W for the ensemble,
// both with the standard tie corrections.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "interlock/error.hpp"
#include "interlock/ranking.hpp"
#include "interlock/report.hpp"

namespace interlock {

enum class RankMethod {
  /// Ties share the mean of the ranks they span.
  mid,
  /// Ties share the smallest rank of their block.
  competition,
};

/// m judges (rankings) x n items.
class RankMatrix {
 public:
  RankMatrix() = default;

  void add_judge(std::vector<double> ranks) {
    if (!ranks_.empty() && ranks.size() != ranks_.front().size()) {
      throw Error(ErrorKind::shape, "every judge must rank the same items");
    }
    ranks_.push_back(std::move(ranks));
  }

  /// Ranks a value list (largest value first) and adds it as a judge.
  template <typename T>
  void add_values(std::span<const T> values, RankMethod method = RankMethod::mid) {
    if (method == RankMethod::mid) {
      add_judge(midranks(values));
    } else {
      const auto r = competition_ranks(values);
      add_judge(std::vector<double>(r.begin(), r.end()));
    }
  }

  std::size_t judges() const noexcept { return ranks_.size(); }
  std::size_t items() const noexcept { return ranks_.empty() ? 0 : ranks_.front().size(); }
  std::span<const double> judge(std::size_t j) const { return ranks_.at(j); }

 private:
  std::vector<std::vector<double>> ranks_;
};

enum class TieCorrection { apply, none };

/// Uncorrected: W = 12 S / (m^2 (n^3 - n)), S the squared deviation of the
/// item rank sums from their mean.
///
/// Tie-corrected: W = S / (m sum_j V_j), V_j the squared deviation of judge
/// j's ranks from their mean. For mid-ranks V_j = (n^3 - n - T_j) / 12 with
/// T_j = sum (t^3 - t) over tie groups, so this is the usual
/// 12 S / (m^2 (n^3 - n) - m sum_j T_j); written this way it also stays in
/// [0, 1] for competition ranks.
inline double kendall_w(const RankMatrix& ranks, TieCorrection ties = TieCorrection::apply) {
  const std::size_t m = ranks.judges();
  const std::size_t n = ranks.items();
  if (m < 2 || n < 2) throw Error(ErrorKind::shape, "Kendall's W needs >= 2 judges and >= 2 items");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  std::vector<double> rank_sum(n, 0.0);
  double judge_ss = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const auto row = ranks.judge(j);
    double mean = 0;
    for (std::size_t i = 0; i < n; ++i) {
      rank_sum[i] += row[i];
      mean += row[i];
    }
    mean /= nd;
    for (double r : row) judge_ss += (r - mean) * (r - mean);
  }
  double centre = 0;
  for (double r : rank_sum) centre += r;
  centre /= nd;
  double s = 0;
  for (double r : rank_sum) s += (r - centre) * (r - centre);
  const double denom =
      ties == TieCorrection::apply ? md * judge_ss : md * md * (nd * nd * nd - nd) / 12.0;
  if (!(denom > 0)) throw Error(ErrorKind::undefined_statistic, "every judge is fully tied");
  return s / denom;
}

/// Tie-corrected tau-b: (C - D) / sqrt((P - Tx)(P - Ty)), P = n(n-1)/2.
template <typename T>
double kendall_tau_b(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::shape, "tau-b needs equal-length lists");
  const std::size_t n = x.size();
  if (n < 2) throw Error(ErrorKind::shape, "tau-b needs at least 2 items");
  std::int64_t concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const int sx = (x[i] < x[k]) ? -1 : (x[k] < x[i] ? 1 : 0);
      const int sy = (y[i] < y[k]) ? -1 : (y[k] < y[i] ? 1 : 0);
      const int prod = sx * sy;
      if (prod > 0) ++concordant;
      else if (prod < 0) ++discordant;
    }
  }
  auto tied_pairs = [](std::span<const T> v) {
    std::int64_t sum = 0;
    for (std::size_t t : tie_groups(v)) {
      sum += static_cast<std::int64_t>(t) * static_cast<std::int64_t>(t - 1) / 2;
    }
    return sum;
  };
  const std::int64_t pairs = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const double denom = std::sqrt(static_cast<double>(pairs - tied_pairs(x)) *
                                 static_cast<double>(pairs - tied_pairs(y)));
  if (!(denom > 0)) throw Error(ErrorKind::undefined_statistic, "a list is fully tied");
  return static_cast<double>(concordant - discordant) / denom;
}

inline constexpr std::array<const char*, 3> kMeasureNames = {"degree", "closeness", "betweenness"};

struct ConcordanceReport {
  std::size_t n = 0;
  /// Mid-ranks, tie-corrected. Every W is NaN (null in JSON) when all
  /// rankings are fully tied.
  double w = 0;
  /// Mid-ranks, no tie correction.
  double w_uncorrected = 0;
  /// Competition ranks, tie-corrected (sensitivity variant).
  double w_competition = 0;
  /// Tau-b between the value lists, in kMeasureNames order; NaN (null in
  /// JSON) for a pair involving a fully tied list.
  std::array<std::array<double, 3>, 3> tau{};
  /// Number of groups of >= 2 tied values per measure.
  std::array<std::size_t, 3> tie_groups{};

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    auto number = [](double x) -> nlohmann::ordered_json {
      if (std::isnan(x)) return nullptr;
      return x;
    };
    j["kendall_w"] = number(w);
    j["kendall_w_uncorrected"] = number(w_uncorrected);
    j["kendall_w_competition_ranks"] = number(w_competition);
    nlohmann::ordered_json pairs = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        const std::string key = std::string(kMeasureNames[a]) + "_" + kMeasureNames[b];
        pairs[key] = number(tau[a][b]);
      }
    }
    j["tau_b"] = pairs;
    nlohmann::ordered_json groups = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < 3; ++a) groups[kMeasureNames[a]] = tie_groups[a];
    j["tie_groups"] = groups;
    return j;
  }
};

/// Agreement of the degree, closeness and betweenness rankings of a report.
/// Ranks are derived from the underlying values, not from the printed rank
/// columns.
inline ConcordanceReport centrality_concordance(const CentralityReport& report) {
  if (report.size() < 2) throw Error(ErrorKind::shape, "concordance needs at least 2 vertices");
  const std::array<std::vector<double>, 3> values = {report.degrees(), report.closeness(),
                                                     report.betweenness()};
  RankMatrix mid, competition;
  for (const auto& v : values) {
    mid.add_values<double>(v, RankMethod::mid);
    competition.add_values<double>(v, RankMethod::competition);
  }
  ConcordanceReport out;
  out.n = report.size();
  auto or_nan = [](auto&& compute) {
    try {
      return compute();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::undefined_statistic) throw;
      return std::nan("");
    }
  };
  out.w = or_nan([&] { return kendall_w(mid, TieCorrection::apply); });
  out.w_uncorrected = or_nan([&] { return kendall_w(mid, TieCorrection::none); });
  out.w_competition = or_nan([&] { return kendall_w(competition, TieCorrection::apply); });
  for (std::size_t a = 0; a < 3; ++a) {
    out.tau[a][a] = 1.0;
    for (std::size_t b = a + 1; b < 3; ++b) {
      const double tau = or_nan([&] { return kendall_tau_b<double>(values[a], values[b]); });
      out.tau[a][b] = out.tau[b][a] = tau;
    }
    std::size_t groups = 0;
    for (std::size_t t : tie_groups<double>(values[a])) groups += t >= 2 ? 1 : 0;
    out.tie_groups[a] = groups;
  }
  return out;
}

}  // namespace interlock
