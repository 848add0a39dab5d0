#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "interlock/error.hpp"
#include "interlock/graph.hpp"
#include "interlock/label.hpp"

namespace interlock {

/// One seat: an editor (actor) sitting on a journal board (event).
struct Incidence {
  VertexId actor;
  VertexId event;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Two-mode editor x journal incidence structure.
///
/// Actors and events live in separate label spaces. Labels are interned:
/// adding an existing label returns its id. Incidences are unique.
class AffiliationNetwork {
 public:
  VertexId add_actor(std::string_view label) {
    return intern(actor_labels_, actor_index_, label, actor_boards_);
  }

  VertexId add_event(std::string_view label) {
    return intern(event_labels_, event_index_, label, event_members_);
  }

  /// Returns false (and changes nothing) when the seat already exists.
  bool add_incidence(VertexId actor, VertexId event) {
    if (actor >= actor_labels_.size()) {
      throw Error(ErrorKind::unknown_vertex,
                  "actor id " + std::to_string(actor) + " out of range");
    }
    if (event >= event_labels_.size()) {
      throw Error(ErrorKind::unknown_vertex,
                  "event id " + std::to_string(event) + " out of range");
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(actor) << 32) | event;
    if (!seat_keys_.insert(key).second) return false;
    incidences_.push_back({actor, event});
    actor_boards_[actor].push_back(event);
    event_members_[event].push_back(actor);
    return true;
  }

  std::size_t actor_count() const noexcept { return actor_labels_.size(); }
  std::size_t event_count() const noexcept { return event_labels_.size(); }
  std::size_t seat_count() const noexcept { return incidences_.size(); }

  /// Seats per actor; 0 for a network without actors.
  double participation_rate() const noexcept {
    return actor_labels_.empty()
               ? 0.0
               : static_cast<double>(incidences_.size()) /
                     static_cast<double>(actor_labels_.size());
  }

  std::span<const Incidence> incidences() const noexcept { return incidences_; }

  /// Events of one actor, in insertion order.
  std::span<const VertexId> boards_of(VertexId actor) const {
    return actor_boards_.at(actor);
  }

  /// Actors of one event (the board), in insertion order.
  std::span<const VertexId> board(VertexId event) const {
    return event_members_.at(event);
  }

  const std::string& actor_label(VertexId a) const { return actor_labels_.at(a); }
  const std::string& event_label(VertexId e) const { return event_labels_.at(e); }
  std::span<const std::string> actor_labels() const noexcept { return actor_labels_; }
  std::span<const std::string> event_labels() const noexcept { return event_labels_; }

 private:
  static VertexId intern(std::vector<std::string>& labels,
                         std::unordered_map<std::string, VertexId>& index,
                         std::string_view raw,
                         std::vector<std::vector<VertexId>>& lists) {
    std::string key = normalize_label(raw);
    if (auto it = index.find(key); it != index.end()) return it->second;
    const auto id = static_cast<VertexId>(labels.size());
    index.emplace(key, id);
    labels.push_back(std::move(key));
    lists.emplace_back();
    return id;
  }

  std::vector<std::string> actor_labels_;
  std::vector<std::string> event_labels_;
  std::unordered_map<std::string, VertexId> actor_index_;
  std::unordered_map<std::string, VertexId> event_index_;
  std::vector<Incidence> incidences_;
  std::vector<std::vector<VertexId>> actor_boards_;
  std::vector<std::vector<VertexId>> event_members_;
  std::unordered_set<std::uint64_t> seat_keys_;
};

}  // namespace interlock
