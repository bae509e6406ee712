#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "transit/core/types.hpp"

namespace transit {

// Transfer between two stop events of different trips. travel_time is the
// shortest-path distance in the transfer graph between the two stops, and
// [delay_min, delay_max] is the origin arrival-delay interval under which the
// shortcut is known to be needed and stays feasible.
struct event_shortcut {
  event_idx from_event = 0;
  event_idx to_event = 0;
  time_sec travel_time = 0;
  time_sec delay_min = 0;
  time_sec delay_max = 0;

  friend bool operator==(const event_shortcut&, const event_shortcut&) = default;
};

// Adjacency-indexed shortcut set over all stop-event vertices. The update
// phase flips active flags on base records and appends replacement records,
// which are always active.
struct event_shortcut_set {
  time_sec delta_max = 0;
  std::uint32_t num_events = 0;
  std::vector<event_shortcut> records;  // sorted by (from_event, to_event)
  std::vector<std::uint32_t> first;     // CSR offsets, size num_events + 1
  std::vector<std::uint8_t> active;     // parallel to records
  std::vector<event_shortcut> extra;    // replacement additions

  std::size_t base_count() const { return records.size(); }
  std::size_t active_count() const;
  std::size_t total_count() const { return records.size() + extra.size(); }

  // Sorts records and rebuilds offsets; resets all base flags to active and
  // drops extras. Call after bulk-filling records.
  void rebuild_index();

  // Calls fn(record, is_active) for every record including extras.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < records.size(); ++i) {
      fn(records[i], active[i] != 0);
    }
    for (const auto& r : extra) {
      fn(r, true);
    }
  }

  // Calls fn(record) for every active record with the given origin event.
  template <typename Fn>
  void for_each_active_from(event_idx from, Fn&& fn) const {
    for (auto i = first[from]; i < first[from + 1]; ++i) {
      if (active[i]) {
        fn(records[i]);
      }
    }
    for (const auto& r : extra) {
      if (r.from_event == from) {
        fn(r);
      }
    }
  }
};

// Binary format: a header, 16 bytes of per-vertex data for every stop event,
// and 16 bytes per shortcut record. Only active records are written, so the
// file is a canonical snapshot of the current set.
void write_event_shortcuts(const event_shortcut_set& es, const std::filesystem::path& file);
event_shortcut_set read_event_shortcuts(const std::filesystem::path& file);

}  // namespace transit
