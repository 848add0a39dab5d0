#pragma once

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>

#include "interlock/affiliation.hpp"
#include "interlock/error.hpp"
#include "interlock/pajek.hpp"
#include "interlock/text.hpp"

namespace interlock {

/// Reads `editor,journal` rows (UTF-8, RFC-4180 quoting) into a two-mode
/// network. Repeated rows collapse into one seat and are counted in
/// `warnings->duplicate_rows`.
inline AffiliationNetwork read_affiliation_csv(std::istream& in,
                                               IngestWarnings* warnings = nullptr) {
  text::CsvReader reader(in);
  text::CsvRecord record;
  if (!reader.next(record)) {
    throw Error(ErrorKind::parse, "empty input; expected header `editor,journal`", 1);
  }
  if (record.fields.size() != 2 || text::trim(record.fields[0]) != "editor" ||
      text::trim(record.fields[1]) != "journal") {
    throw Error(ErrorKind::parse, "expected header `editor,journal`", record.line);
  }
  AffiliationNetwork a;
  while (reader.next(record)) {
    if (record.fields.size() != 2) {
      throw Error(ErrorKind::parse,
                  "expected 2 fields, found " + std::to_string(record.fields.size()),
                  record.line);
    }
    const std::string_view editor = text::trim(record.fields[0]);
    const std::string_view journal = text::trim(record.fields[1]);
    if (editor.empty() || journal.empty()) {
      throw Error(ErrorKind::parse, "empty editor or journal field", record.line);
    }
    VertexId actor, event;
    try {
      actor = a.add_actor(editor);
      event = a.add_event(journal);
    } catch (const Error& e) {
      throw e.at_line(record.line);
    }
    if (a.actor_label(actor).empty() || a.event_label(event).empty()) {
      throw Error(ErrorKind::parse, "field is blank after normalization", record.line);
    }
    if (!a.add_incidence(actor, event) && warnings) ++warnings->duplicate_rows;
  }
  return a;
}

inline AffiliationNetwork read_affiliation_csv(std::string_view bytes,
                                               IngestWarnings* warnings = nullptr) {
  std::istringstream in{std::string(bytes)};
  return read_affiliation_csv(in, warnings);
}

/// One row per seat, sorted bytewise by (editor, journal) label, so that
/// writing is a fixed point of reading. Journals without seats are dropped.
inline std::string write_affiliation_csv(const AffiliationNetwork& a) {
  std::vector<Incidence> seats(a.incidences().begin(), a.incidences().end());
  std::sort(seats.begin(), seats.end(), [&](const Incidence& x, const Incidence& y) {
    return std::tie(a.actor_label(x.actor), a.event_label(x.event)) <
           std::tie(a.actor_label(y.actor), a.event_label(y.event));
  });
  std::string out = "editor,journal\n";
  for (const auto& s : seats) {
    out += text::csv_field(a.actor_label(s.actor));
    out += ',';
    out += text::csv_field(a.event_label(s.event));
    out += '\n';
  }
  return out;
}

}  // namespace interlock
