#pragma once

// Locale-independent number parsing/formatting and RFC-4180 CSV records.

#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "interlock/error.hpp"

namespace interlock::text {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto lower = [](char c) {
      return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    };
    if (lower(a[i]) != lower(b[i])) return false;
  }
  return true;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

/// Dot-decimal only, regardless of the global locale.
inline std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value,
                                   std::chars_format::fixed);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

/// Fixed-point with `decimals` digits after the dot; never locale-dependent.
inline std::string fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc{}) return "nan";
  std::string out(buf.data(), ptr);
  // "-0.000" prints as "0.000".
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

/// Shortest representation that round-trips.
inline std::string shortest(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), ptr);
}

/// A CSV record and the 1-based line it started on.
struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

/// Streaming RFC-4180 reader. Quoted fields may contain commas, doubled
/// quotes and line breaks; CRLF and LF are both accepted.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  /// Reads the next non-blank record; returns false at end of input.
  bool next(CsvRecord& record) {
    while (true) {
      if (in_.peek() == std::char_traits<char>::eof()) return false;
      record.fields.clear();
      record.line = line_ + 1;
      read_record(record.fields);
      if (record.fields.size() == 1 && trim(record.fields[0]).empty() &&
          !last_had_quotes_) {
        continue;
      }
      if (record.line == 1 && !record.fields.empty()) {
        strip_bom(record.fields.front());
      }
      return true;
    }
  }

  std::size_t line() const noexcept { return line_; }

 private:
  static void strip_bom(std::string& s) {
    if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xEF &&
        static_cast<unsigned char>(s[1]) == 0xBB &&
        static_cast<unsigned char>(s[2]) == 0xBF) {
      s.erase(0, 3);
    }
  }

  void read_record(std::vector<std::string>& fields) {
    std::string field;
    bool in_quotes = false;
    bool quoted = false;
    last_had_quotes_ = false;
    const std::size_t start = line_ + 1;
    int c;
    while ((c = in_.get()) != std::char_traits<char>::eof()) {
      const char ch = static_cast<char>(c);
      if (in_quotes) {
        if (ch == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            in_quotes = false;
          }
        } else {
          if (ch == '\n') ++line_;
          field.push_back(ch);
        }
        continue;
      }
      if (ch == '"') {
        if (!trim(field).empty() || quoted) {
          throw Error(ErrorKind::parse, "stray quote inside unquoted field",
                      start);
        }
        field.clear();
        in_quotes = true;
        quoted = true;
        last_had_quotes_ = true;
      } else if (ch == ',') {
        fields.push_back(std::move(field));
        field.clear();
        quoted = false;
      } else if (ch == '\n') {
        ++line_;
        if (!field.empty() && field.back() == '\r') field.pop_back();
        fields.push_back(std::move(field));
        return;
      } else if (quoted) {
        if (ch != ' ' && ch != '\t' && ch != '\r') {
          throw Error(ErrorKind::parse, "characters after closing quote",
                      start);
        }
      } else {
        field.push_back(ch);
      }
    }
    if (in_quotes) {
      throw Error(ErrorKind::parse, "unterminated quoted field", start);
    }
    ++line_;
    if (!field.empty() && field.back() == '\r') field.pop_back();
    fields.push_back(std::move(field));
  }

  std::istream& in_;
  std::size_t line_ = 0;
  bool last_had_quotes_ = false;
};

/// Quotes a CSV field only when RFC-4180 requires it (or it has edge spaces).
inline std::string csv_field(std::string_view value) {
  const bool needs = value.find_first_of(",\"\r\n") != std::string_view::npos ||
                     (!value.empty() && (value.front() == ' ' ||
                                         value.back() == ' '));
  if (!needs) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace interlock::text
