#pragma once

#include <filesystem>
#include <vector>

#include "transit/shortcuts/event_set.hpp"
#include "transit/timetable/types.hpp"

namespace transit {

struct stop_shortcut {
  stop_idx from = 0;
  stop_idx to = 0;
  time_sec travel_time = 0;

  friend bool operator==(const stop_shortcut&, const stop_shortcut&) = default;
};

struct stop_shortcut_set {
  std::vector<stop_shortcut> edges;  // sorted by (from, to), unique pairs
};

// Projects the active event shortcuts onto stop pairs. Each stop edge carries
// the minimum travel time over its preimage; delay annotations are dropped.
stop_shortcut_set project(const event_shortcut_set& es, const timetable& tt);

// Union of g and the stop shortcuts. A parallel edge keeps the smaller travel
// time; the vertex set is unchanged. Throws on unknown stop ids.
transfer_graph merge_into_transfer_graph(const stop_shortcut_set& ss, const transfer_graph& g);

void write_stop_shortcuts(const stop_shortcut_set& ss, const std::filesystem::path& file);
stop_shortcut_set read_stop_shortcuts(const std::filesystem::path& file);

}  // namespace transit
