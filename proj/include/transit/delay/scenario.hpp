#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "transit/core/types.hpp"
#include "transit/timetable/types.hpp"

namespace transit {

// One delay incident: all events of the trip from start_index onward receive
// the same arrival and departure delay.
struct incident {
  trip_idx trip = 0;
  std::uint32_t start_index = 0;
  time_sec delay = 0;
};

// Sparse delay scenario. Incidents are sorted by trip, at most one per trip.
struct delay_scenario {
  time_sec delta_max = 0;  // bound the scenario was generated under
  time_window window{0, k_day_max};
  std::uint64_t seed = 0;
  std::vector<incident> incidents;

  bool is_zero() const { return incidents.empty(); }
  time_sec arr_delay(const stop_event& ev) const { return delay_of(ev); }
  time_sec dep_delay(const stop_event& ev) const { return delay_of(ev); }

 private:
  time_sec delay_of(const stop_event& ev) const;
};

struct delayed_times {
  time_sec arr = 0;
  time_sec dep = 0;
};

delayed_times apply_delay(const stop_event& ev, const delay_scenario& sc);

// True iff every assigned delay lies in [0, delta_max].
bool validate_scenario(const delay_scenario& sc, time_sec delta_max);

// Every trip delayed by d on all events. d == 0 gives the best case,
// d == delta_max the worst case.
delay_scenario uniform_scenario(const timetable& tt, time_sec d);

// Sorts incidents by trip and rejects duplicates and dangling references.
void normalize_scenario(delay_scenario& sc, const timetable& tt);

delay_scenario load_scenario(const std::filesystem::path& file, const timetable& tt);
void save_scenario(const delay_scenario& sc, const std::filesystem::path& file);

}  // namespace transit
