#pragma once

#include <cstdint>

#include "transit/timetable/types.hpp"

namespace transit {

struct synth_params {
  std::uint32_t num_stops = 50;
  std::uint32_t num_routes = 10;
  std::uint32_t trips_per_route = 5;
  double transfer_degree = 2.5;   // average outgoing walk edges per stop
  time_sec buffer_time = 0;       // applied to every stop
  std::uint32_t min_route_len = 3;
  std::uint32_t max_route_len = 7;
  time_sec first_departure = 39600;  // 11:00
  time_sec departure_span = 14400;   // first departures spread over 4 h
};

// Stops on random planar coordinates, routes as nearest-neighbour walks,
// trips at regular headways with jitter, walk edges to nearby stops.
// Deterministic for a given seed; the result is validated and finalized.
timetable generate_synthetic(const synth_params& params, std::uint64_t seed);

}  // namespace transit
