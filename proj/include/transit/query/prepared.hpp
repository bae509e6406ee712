#pragma once

#include <optional>
#include <vector>

#include "transit/delay/scenario.hpp"
#include "transit/shortcuts/event_set.hpp"
#include "transit/shortcuts/project.hpp"
#include "transit/timetable/types.hpp"

namespace transit {

// One time-dependent edge between a fixed stop pair: connections with
// dominated entries filtered so arrivals increase with departures.
struct td_edge {
  stop_idx to = 0;
  struct hop {
    time_sec dep = 0;
    time_sec arr = 0;
    trip_idx trip = 0;
    std::uint32_t event_index = 0;
  };
  std::vector<hop> hops;  // sorted by dep ascending
};

// Everything a query engine needs for one delay scenario, computed up front
// (hypothetical mode: updates and re-sorting are never part of query time).
struct prepared_network {
  const timetable* tt = nullptr;
  delay_scenario scenario;

  std::vector<time_sec> ev_arr;        // delayed event times
  std::vector<time_sec> ev_dep;
  std::vector<connection> connections; // re-sorted by delayed departure
  std::vector<std::vector<td_edge>> td_adj;  // per stop

  const transfer_graph* base = nullptr;
  std::optional<transfer_graph> augmented;        // base merged with stop shortcuts
  const event_shortcut_set* shortcuts = nullptr;  // post-update set for TB

  time_sec arr_of(event_idx e) const { return ev_arr[e]; }
  time_sec dep_of(event_idx e) const { return ev_dep[e]; }
};

prepared_network prepare(const timetable& tt, const delay_scenario& sc);

// Merges the stop shortcuts into the base graph for CSA/RAPTOR.
void attach_stop_shortcuts(prepared_network& net, const stop_shortcut_set& ss);

void attach_event_shortcuts(prepared_network& net, const event_shortcut_set& es);

}  // namespace transit
