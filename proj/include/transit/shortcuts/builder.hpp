#pragma once

#include <cstdint>
#include <vector>

#include "transit/shortcuts/event_set.hpp"
#include "transit/timetable/types.hpp"

namespace transit {

struct builder_config {
  std::uint64_t seed = 1;
  // random scenarios assigning every trip an independent uniform delay
  std::uint32_t sample_count = 8;
  // deterministic single-trip delay magnitudes; empty means {delta_max}
  std::vector<time_sec> trip_delay_grid;
  // enumeration budget; exceeding it raises budget_error
  std::size_t max_pairs = 2'000'000;
};

// Brute-force shortcut computation for desk-scale networks. A transfer
// (a, b) enters the set when, under one of the enumerated delay scenarios,
// some Pareto-optimal two-trip journey alights at a, walks the shortest path
// to b's stop and boards there, with b the earliest catchable event of its
// trip. Second trips caught without walking (same-stop changes) produce no
// shortcut. delay_min is the smallest origin arrival delay observed over the
// marking scenarios; delay_max is the largest origin delay that keeps the
// transfer feasible against the undelayed timetable, capped at delta_max.
// Transfers that are only catchable thanks to a delayed target drop out.
event_shortcut_set build_event_shortcuts(const timetable& tt, time_sec delta_max,
                                         const builder_config& cfg = {});

}  // namespace transit
