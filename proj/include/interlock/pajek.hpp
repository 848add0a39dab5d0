#pragma once

// Pajek `.net` / `.clu` support, restricted to undirected valued networks:
// `*Vertices` and `*Edges` sections plus `%` comment lines. Two-mode files
// (`*Vertices N M`) are read and written as affiliation networks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "interlock/affiliation.hpp"
#include "interlock/error.hpp"
#include "interlock/graph.hpp"
#include "interlock/partition.hpp"
#include "interlock/text.hpp"

namespace interlock {

/// Non-fatal input irregularities counted by the readers.
struct IngestWarnings {
  std::size_t duplicate_rows = 0;
  std::size_t ignored_vertex_attributes = 0;
  std::size_t ignored_edge_attributes = 0;

  std::size_t total() const noexcept {
    return duplicate_rows + ignored_vertex_attributes + ignored_edge_attributes;
  }
};

namespace pajek_detail {

struct RawEdge {
  std::size_t u;  // dense index
  std::size_t v;
  LineValue value;
  std::size_t line;
};

struct RawNetwork {
  std::size_t vertex_count = 0;
  std::optional<std::size_t> first_mode;  // set for `*Vertices N M`
  std::vector<std::string> labels;        // dense order = file order
  std::vector<std::size_t> file_ids;      // 1-based id of each dense vertex
  std::vector<std::size_t> label_lines;
  std::vector<RawEdge> edges;
};

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

/// Splits a vertex line into id, label and the count of trailing tokens.
inline void parse_vertex_line(std::string_view line, std::size_t lineno,
                              std::string_view& id, std::string& label,
                              std::size_t& extra) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  };
  skip();
  std::size_t start = i;
  while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
  id = line.substr(start, i - start);
  skip();
  label.clear();
  if (i < line.size() && line[i] == '"') {
    ++i;
    bool closed = false;
    while (i < line.size()) {
      const char c = line[i++];
      if (c == '\\' && i < line.size() && (line[i] == '"' || line[i] == '\\')) {
        label.push_back(line[i++]);
      } else if (c == '"') {
        closed = true;
        break;
      } else {
        label.push_back(c);
      }
    }
    if (!closed) throw Error(ErrorKind::parse, "unterminated vertex label", lineno);
  } else if (i < line.size()) {
    start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    label = std::string(line.substr(start, i - start));
  } else {
    label = std::string(id);
  }
  extra = split_ws(line.substr(std::min(i, line.size()))).size();
}

inline RawNetwork parse(std::istream& in, IngestWarnings* warnings) {
  enum class Section { none, vertices, edges };
  RawNetwork net;
  Section section = Section::none;
  bool saw_vertices = false;
  std::vector<std::size_t> dense_of;  // file id - 1 -> dense index
  std::size_t vertex_lines = 0;
  std::size_t vertices_header_line = 0;
  std::string raw;
  std::size_t lineno = 0;

  auto close_vertices = [&](std::size_t at) {
    if (vertex_lines != net.vertex_count) {
      throw Error(ErrorKind::parse,
                  "*Vertices " + std::to_string(net.vertex_count) +
                      " declared but " + std::to_string(vertex_lines) +
                      " vertex lines found",
                  at);
    }
  };

  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (lineno == 1 && raw.size() >= 3 && raw.compare(0, 3, "\xEF\xBB\xBF") == 0) {
      raw.erase(0, 3);
    }
    const std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '%') continue;

    if (line.front() == '*') {
      const auto tokens = split_ws(line);
      const std::string_view keyword = tokens.front();
      if (text::iequals(keyword, "*vertices")) {
        if (saw_vertices) throw Error(ErrorKind::parse, "second *Vertices section", lineno);
        if (tokens.size() < 2 || tokens.size() > 3) {
          throw Error(ErrorKind::parse, "expected `*Vertices n`", lineno);
        }
        auto n = text::parse_int<std::size_t>(tokens[1]);
        if (!n) throw Error(ErrorKind::parse, "vertex count is not an integer", lineno);
        net.vertex_count = *n;
        if (tokens.size() == 3) {
          auto m = text::parse_int<std::size_t>(tokens[2]);
          if (!m || *m > *n) {
            throw Error(ErrorKind::parse, "invalid two-mode partition size", lineno);
          }
          net.first_mode = *m;
        }
        dense_of.assign(*n, SIZE_MAX);
        saw_vertices = true;
        vertices_header_line = lineno;
        section = Section::vertices;
      } else if (text::iequals(keyword, "*edges")) {
        if (!saw_vertices) throw Error(ErrorKind::parse, "*Edges before *Vertices", lineno);
        if (tokens.size() != 1) {
          throw Error(ErrorKind::parse, "multi-relational *Edges sections are not supported", lineno);
        }
        if (section == Section::vertices) close_vertices(lineno);
        section = Section::edges;
      } else if (text::iequals(keyword, "*arcs") || text::iequals(keyword, "*arcslist")) {
        throw Error(ErrorKind::unsupported_directed,
                    "directed " + std::string(keyword) + " section", lineno);
      } else if (text::iequals(keyword, "*network")) {
        continue;
      } else {
        throw Error(ErrorKind::parse,
                    "unsupported section " + std::string(keyword), lineno);
      }
      continue;
    }

    switch (section) {
      case Section::none:
        throw Error(ErrorKind::parse, "data before *Vertices", lineno);
      case Section::vertices: {
        std::string_view id_token;
        std::string label;
        std::size_t extra = 0;
        parse_vertex_line(line, lineno, id_token, label, extra);
        auto id = text::parse_int<std::size_t>(id_token);
        if (!id) throw Error(ErrorKind::parse, "vertex id is not an integer", lineno);
        if (*id < 1 || *id > net.vertex_count) {
          throw Error(ErrorKind::parse,
                      "vertex id " + std::to_string(*id) + " outside 1.." +
                          std::to_string(net.vertex_count),
                      lineno);
        }
        if (dense_of[*id - 1] != SIZE_MAX) {
          throw Error(ErrorKind::parse, "vertex id " + std::to_string(*id) + " repeated", lineno);
        }
        dense_of[*id - 1] = vertex_lines++;
        net.labels.push_back(std::move(label));
        net.file_ids.push_back(*id);
        net.label_lines.push_back(lineno);
        if (extra > 0 && warnings) ++warnings->ignored_vertex_attributes;
        break;
      }
      case Section::edges: {
        const auto tokens = split_ws(line);
        if (tokens.size() < 2) throw Error(ErrorKind::parse, "edge line needs two endpoints", lineno);
        std::size_t ends[2];
        for (int k = 0; k < 2; ++k) {
          auto id = text::parse_int<std::size_t>(tokens[k]);
          if (!id) throw Error(ErrorKind::parse, "edge endpoint is not an integer", lineno);
          if (*id < 1 || *id > net.vertex_count) {
            throw Error(ErrorKind::unknown_vertex,
                        "edge references vertex " + std::to_string(*id) +
                            " but n=" + std::to_string(net.vertex_count),
                        lineno);
          }
          ends[k] = dense_of[*id - 1];
        }
        LineValue value = 1;
        if (tokens.size() >= 3) {
          auto parsed = text::parse_int<LineValue>(tokens[2]);
          if (!parsed) {
            throw Error(ErrorKind::parse,
                        "edge value `" + std::string(tokens[2]) + "` is not an integer", lineno);
          }
          if (*parsed == 0) throw Error(ErrorKind::parse, "edge value must be >= 1", lineno);
          value = *parsed;
        }
        if (tokens.size() > 3 && warnings) ++warnings->ignored_edge_attributes;
        net.edges.push_back({ends[0], ends[1], value, lineno});
        break;
      }
    }
  }
  if (!saw_vertices) throw Error(ErrorKind::parse, "missing *Vertices section", lineno + 1);
  if (section == Section::vertices) close_vertices(vertices_header_line);
  return net;
}

inline void write_label(std::ostream& out, std::string_view label) {
  out << '"';
  for (char c : label) {
    if (c == '"' || c == '\\') out << '\\';
    out << c;
  }
  out << '"';
}

}  // namespace pajek_detail

/// Reads a one-mode undirected network. Vertex ids are remapped to dense
/// indices in file order; missing edge values default to 1.
inline JournalGraph read_pajek_net(std::istream& in,
                                   IngestWarnings* warnings = nullptr) {
  auto raw = pajek_detail::parse(in, warnings);
  if (raw.first_mode) {
    throw Error(ErrorKind::parse,
                "two-mode network (`*Vertices N M`); read it as an affiliation network", 1);
  }
  JournalGraph g;
  for (std::size_t i = 0; i < raw.labels.size(); ++i) {
    try {
      g.add_vertex(raw.labels[i]);
    } catch (const Error& e) {
      throw e.at_line(raw.label_lines[i]);
    }
  }
  for (const auto& e : raw.edges) {
    try {
      g.add_edge(static_cast<VertexId>(e.u), static_cast<VertexId>(e.v), e.value);
    } catch (const Error& err) {
      throw err.at_line(e.line);
    }
  }
  return g;
}

inline JournalGraph read_pajek_net(std::string_view bytes,
                                   IngestWarnings* warnings = nullptr) {
  std::istringstream in{std::string(bytes)};
  return read_pajek_net(in, warnings);
}

/// Canonical form: quoted labels in id order, edges `u v value` with u < v
/// sorted by (u, v), LF line endings.
inline void write_pajek_net(std::ostream& out, const JournalGraph& g) {
  out << "*Vertices " << g.vertex_count() << '\n';
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << (v + 1) << ' ';
    pajek_detail::write_label(out, g.labels()[v]);
    out << '\n';
  }
  out << "*Edges\n";
  for (const Edge& e : g.sorted_edges()) {
    out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << e.value << '\n';
  }
}

inline std::string write_pajek_net(const JournalGraph& g) {
  std::ostringstream out;
  write_pajek_net(out, g);
  return out.str();
}

/// `*Vertices n` then the 1-based component number of each vertex.
inline std::string write_pajek_clu(const ComponentPartition& p) {
  std::string out = "*Vertices " + std::to_string(p.vertex_count()) + "\n";
  for (ComponentId c : p.assignment) {
    out += std::to_string(c + 1);
    out += '\n';
  }
  return out;
}

/// Reads a two-mode file: vertices 1..M are actors (editors), M+1..N events
/// (journals); every line joins an actor to an event. Line values are
/// ignored: a line is one seat.
inline AffiliationNetwork read_pajek_affiliation(std::istream& in,
                                                 IngestWarnings* warnings = nullptr) {
  auto raw = pajek_detail::parse(in, warnings);
  if (!raw.first_mode) {
    throw Error(ErrorKind::parse, "expected a two-mode `*Vertices N M` header", 1);
  }
  const std::size_t m = *raw.first_mode;
  AffiliationNetwork a;
  std::vector<VertexId> local(raw.labels.size());
  std::vector<bool> is_actor(raw.labels.size());
  for (std::size_t i = 0; i < raw.labels.size(); ++i) {
    is_actor[i] = raw.file_ids[i] <= m;
    const std::size_t before = is_actor[i] ? a.actor_count() : a.event_count();
    local[i] = is_actor[i] ? a.add_actor(raw.labels[i]) : a.add_event(raw.labels[i]);
    const std::size_t after = is_actor[i] ? a.actor_count() : a.event_count();
    if (after == before) {
      throw Error(ErrorKind::duplicate_vertex,
                  "label \"" + raw.labels[i] + "\" repeated within one mode",
                  raw.label_lines[i]);
    }
  }
  for (const auto& e : raw.edges) {
    if (is_actor[e.u] == is_actor[e.v]) {
      throw Error(ErrorKind::parse, "line joins two vertices of the same mode", e.line);
    }
    const std::size_t actor = is_actor[e.u] ? e.u : e.v;
    const std::size_t event = is_actor[e.u] ? e.v : e.u;
    if (!a.add_incidence(local[actor], local[event]) && warnings) {
      ++warnings->duplicate_rows;
    }
  }
  return a;
}

inline AffiliationNetwork read_pajek_affiliation(std::string_view bytes,
                                                 IngestWarnings* warnings = nullptr) {
  std::istringstream in{std::string(bytes)};
  return read_pajek_affiliation(in, warnings);
}

/// Two-mode canonical form: actors first, then events; one `a e 1` line per
/// seat sorted by (a, e).
inline std::string write_pajek_affiliation(const AffiliationNetwork& a) {
  std::ostringstream out;
  const std::size_t m = a.actor_count();
  out << "*Vertices " << (m + a.event_count()) << ' ' << m << '\n';
  std::size_t id = 1;
  for (const auto& label : a.actor_labels()) {
    out << id++ << ' ';
    pajek_detail::write_label(out, label);
    out << '\n';
  }
  for (const auto& label : a.event_labels()) {
    out << id++ << ' ';
    pajek_detail::write_label(out, label);
    out << '\n';
  }
  out << "*Edges\n";
  std::vector<Incidence> seats(a.incidences().begin(), a.incidences().end());
  std::sort(seats.begin(), seats.end(), [](const Incidence& x, const Incidence& y) {
    return std::pair(x.actor, x.event) < std::pair(y.actor, y.event);
  });
  for (const auto& s : seats) {
    out << (s.actor + 1) << ' ' << (m + s.event + 1) << " 1\n";
  }
  return out.str();
}

}  // namespace interlock
