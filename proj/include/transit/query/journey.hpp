#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transit/core/types.hpp"

namespace transit {

struct query {
  stop_idx source = 0;
  stop_idx target = 0;
  time_sec dep_time = 0;
};

struct journey_leg {
  enum class kind : std::uint8_t { ride, walk };
  kind type = kind::walk;

  // ride legs
  trip_idx trip = k_none;
  event_idx board = k_none;
  event_idx alight = k_none;

  // walk legs; single_edge legs must exist verbatim in the engine's graph
  vertex_idx from = k_none;
  vertex_idx to = k_none;
  time_sec walk_time = 0;
  bool single_edge = false;

  time_sec start_time = 0;
  time_sec end_time = 0;
};

struct journey {
  time_sec arrival = k_never;
  int num_trips = 0;
  std::vector<journey_leg> legs;
};

// Journeys mutually non-dominated on (arrival, num_trips), sorted by
// num_trips ascending with strictly decreasing arrival.
struct pareto_set {
  std::vector<journey> entries;

  void insert(journey j);
  bool empty() const { return entries.empty(); }
  bool same_points(const pareto_set& other) const;
  // true iff some entry has arrival <= arr and num_trips <= trips
  bool covers(time_sec arr, int trips) const;
};

std::optional<time_sec> extract_earliest_arrival(const pareto_set& ps);

std::string format_time(time_sec t);

}  // namespace transit
