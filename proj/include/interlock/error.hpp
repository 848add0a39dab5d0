#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace interlock {

enum class ErrorKind {
  duplicate_vertex,
  duplicate_edge,
  self_loop,
  unknown_vertex,
  invalid_value,
  invalid_label,
  parse,
  unsupported_directed,
  degenerate_network,
  shape,
  undefined_statistic,
  invalid_argument,
  io,
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::duplicate_vertex: return "DuplicateVertex";
    case ErrorKind::duplicate_edge: return "DuplicateEdge";
    case ErrorKind::self_loop: return "SelfLoop";
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::invalid_value: return "InvalidValue";
    case ErrorKind::invalid_label: return "InvalidLabel";
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::unsupported_directed: return "UnsupportedDirected";
    case ErrorKind::degenerate_network: return "DegenerateNetwork";
    case ErrorKind::shape: return "ShapeError";
    case ErrorKind::undefined_statistic: return "UndefinedStatistic";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::io: return "IoError";
  }
  return "Error";
}

/// Every failure raised by the library. `line()` is set (1-based) when the
/// error was raised while reading a text stream.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(compose(kind, message, line)),
        kind_(kind),
        detail_(message),
        line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  /// Same error, attributed to an input line.
  Error at_line(std::size_t line) const { return Error(kind_, detail_, line); }

 private:
  static std::string compose(ErrorKind kind, const std::string& message,
                             std::optional<std::size_t> line) {
    std::string out = to_string(kind);
    if (line) out += " at line " + std::to_string(*line);
    out += ": ";
    out += message;
    return out;
  }

  ErrorKind kind_;
  std::string detail_;
  std::optional<std::size_t> line_;
};

}  // namespace interlock
