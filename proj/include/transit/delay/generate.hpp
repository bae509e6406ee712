#pragma once

#include "transit/delay/scenario.hpp"

namespace transit {

// Incident magnitude model: zero with probability one half, otherwise a
// geometric number of 60 s buckets truncated at one hour, tuned so the mean
// nonzero delay is mean_nonzero.
struct incident_distribution {
  double zero_probability = 0.5;
  time_sec mean_nonzero = 300;
  time_sec bucket = 60;
  time_sec cap = 3600;
};

// One incident per trip with at least one event inside the window. The start
// index is drawn uniformly among the trip's in-window events; the delay
// applies from there to the end of the trip and is capped at delta_max.
delay_scenario generate_incident_scenario(const timetable& tt, std::uint64_t seed,
                                          time_sec delta_max, time_window window,
                                          const incident_distribution& dist = {});

}  // namespace transit
