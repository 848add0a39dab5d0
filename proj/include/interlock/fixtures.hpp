#pragma once

// Readers for the published-table fixtures. All numbers are dot-decimal.
//
//   table_a1.csv  journal,degree,normalized_degree,rank_degree,closeness,
//                 rank_closeness,betweenness_x100,rank_betweenness
//   table_1.csv   degree,freq[,freq_pct]
//   table_3.csv   line_value,freq[,freq_pct]

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "interlock/error.hpp"
#include "interlock/text.hpp"

namespace interlock {

inline constexpr std::array<std::string_view, 8> kTableA1Columns = {
    "journal",   "degree",         "normalized_degree", "rank_degree",
    "closeness", "rank_closeness", "betweenness_x100",  "rank_betweenness"};

/// One journal row of the per-journal centrality table.
struct FixtureRowA1 {
  std::string journal;
  std::int64_t degree = 0;
  double normalized_degree = 0;
  std::int64_t rank_degree = 0;
  double closeness = 0;
  std::int64_t rank_closeness = 0;
  double betweenness_x100 = 0;
  std::int64_t rank_betweenness = 0;
};

struct FixtureDistributionRow {
  std::int64_t value = 0;
  std::int64_t freq = 0;
  std::optional<double> freq_pct;
};

namespace fixture_detail {

inline std::int64_t integer(const std::string& field, std::string_view column,
                            std::size_t line) {
  auto v = text::parse_int<std::int64_t>(field);
  if (!v) {
    throw Error(ErrorKind::parse,
                "column " + std::string(column) + ": `" + field + "` is not an integer", line);
  }
  return *v;
}

inline double decimal(const std::string& field, std::string_view column,
                      std::size_t line) {
  auto v = text::parse_double(field);
  if (!v) {
    throw Error(ErrorKind::parse,
                "column " + std::string(column) + ": `" + field + "` is not a number", line);
  }
  return *v;
}

}  // namespace fixture_detail

/// Reads rows in the per-journal table layout (also the layout of
/// `centrality.csv`). A header row naming the columns is required.
inline std::vector<FixtureRowA1> read_fixture_a1(std::istream& in) {
  using fixture_detail::decimal;
  using fixture_detail::integer;
  text::CsvReader reader(in);
  text::CsvRecord rec;
  if (!reader.next(rec)) throw Error(ErrorKind::parse, "empty table", 1);
  if (rec.fields.size() != kTableA1Columns.size() ||
      text::trim(rec.fields[0]) != kTableA1Columns[0]) {
    throw Error(ErrorKind::parse, "expected the 8-column journal table header", rec.line);
  }
  std::vector<FixtureRowA1> rows;
  while (reader.next(rec)) {
    if (rec.fields.size() != kTableA1Columns.size()) {
      throw Error(ErrorKind::parse,
                  "expected 8 fields, found " + std::to_string(rec.fields.size()), rec.line);
    }
    const auto& f = rec.fields;
    FixtureRowA1 row;
    row.journal = std::string(text::trim(f[0]));
    if (row.journal.empty()) throw Error(ErrorKind::parse, "empty journal name", rec.line);
    row.degree = integer(f[1], kTableA1Columns[1], rec.line);
    row.normalized_degree = decimal(f[2], kTableA1Columns[2], rec.line);
    row.rank_degree = integer(f[3], kTableA1Columns[3], rec.line);
    row.closeness = decimal(f[4], kTableA1Columns[4], rec.line);
    row.rank_closeness = integer(f[5], kTableA1Columns[5], rec.line);
    row.betweenness_x100 = decimal(f[6], kTableA1Columns[6], rec.line);
    row.rank_betweenness = integer(f[7], kTableA1Columns[7], rec.line);
    if (row.degree < 0) throw Error(ErrorKind::parse, "negative degree", rec.line);
    if (row.rank_degree < 1 || row.rank_closeness < 1 || row.rank_betweenness < 1) {
      throw Error(ErrorKind::parse, "ranks must be positive", rec.line);
    }
    if (row.degree == 0 && (row.closeness != 0 || row.betweenness_x100 != 0)) {
      throw Error(ErrorKind::parse, "isolated journal with nonzero closeness or betweenness",
                  rec.line);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<FixtureRowA1> read_fixture_a1(std::string_view bytes) {
  std::istringstream in{std::string(bytes)};
  return read_fixture_a1(in);
}

/// Reads a `<value_column>,freq[,freq_pct]` frequency table.
inline std::vector<FixtureDistributionRow> read_fixture_distribution(
    std::istream& in, std::string_view value_column) {
  using fixture_detail::decimal;
  using fixture_detail::integer;
  text::CsvReader reader(in);
  text::CsvRecord rec;
  if (!reader.next(rec)) throw Error(ErrorKind::parse, "empty table", 1);
  if (rec.fields.size() < 2 || rec.fields.size() > 3 ||
      text::trim(rec.fields[0]) != value_column || text::trim(rec.fields[1]) != "freq") {
    throw Error(ErrorKind::parse,
                "expected header `" + std::string(value_column) + ",freq[,freq_pct]`", rec.line);
  }
  const std::size_t width = rec.fields.size();
  std::vector<FixtureDistributionRow> rows;
  while (reader.next(rec)) {
    if (rec.fields.size() != width) {
      throw Error(ErrorKind::parse, "expected " + std::to_string(width) + " fields", rec.line);
    }
    FixtureDistributionRow row;
    row.value = integer(rec.fields[0], value_column, rec.line);
    row.freq = integer(rec.fields[1], "freq", rec.line);
    if (width == 3) row.freq_pct = decimal(rec.fields[2], "freq_pct", rec.line);
    if (row.freq < 0) throw Error(ErrorKind::parse, "negative frequency", rec.line);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace interlock
