#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "interlock/text.hpp"

namespace interlock {

struct DistributionRow {
  std::int64_t value;
  std::size_t freq;
  double freq_pct;
};

/// Frequency table: one row per occurring value, values strictly increasing,
/// percentages relative to the population size.
struct DistributionTable {
  std::vector<DistributionRow> rows;

  std::size_t total() const noexcept {
    std::size_t sum = 0;
    for (const auto& r : rows) sum += r.freq;
    return sum;
  }

  /// Frequency of `value`; 0 when it does not occur.
  std::size_t freq_of(std::int64_t value) const noexcept {
    for (const auto& r : rows) {
      if (r.value == value) return r.freq;
    }
    return 0;
  }

  /// CSV with header `<value_column>,freq,freq_pct`, percentages printed at
  /// `pct_decimals` (1 for degree tables, 2 for line values).
  std::string to_csv(std::string_view value_column, int pct_decimals) const {
    std::string out;
    out += value_column;
    out += ",freq,freq_pct\n";
    for (const auto& r : rows) {
      out += std::to_string(r.value);
      out += ',';
      out += std::to_string(r.freq);
      out += ',';
      out += text::fixed(r.freq_pct, pct_decimals);
      out += '\n';
    }
    return out;
  }
};

/// Tabulates a sample of integer observations.
template <typename Int>
DistributionTable tabulate(std::span<const Int> sample) {
  std::map<std::int64_t, std::size_t> counts;
  for (Int x : sample) ++counts[static_cast<std::int64_t>(x)];
  DistributionTable table;
  const double n = static_cast<double>(sample.size());
  for (const auto& [value, freq] : counts) {
    table.rows.push_back({value, freq, 100.0 * static_cast<double>(freq) / n});
  }
  return table;
}

}  // namespace interlock
