#include "transit/timetable/connections.hpp"

#include <algorithm>

namespace transit {

std::vector<connection> build_connections(const timetable& tt) {
  std::vector<connection> conns;
  std::size_t total = 0;
  for (const auto& tr : tt.trips) {
    total += tr.events.size() - 1;
  }
  conns.reserve(total);

  for (trip_idx t = 0; t < tt.trips.size(); ++t) {
    const auto& evs = tt.trips[t].events;
    for (std::uint32_t i = 0; i + 1 < evs.size(); ++i) {
      const auto& from = tt.events[evs[i]];
      const auto& to = tt.events[evs[i + 1]];
      conns.push_back({from.stop, to.stop, from.dep, to.arr, t, i});
    }
  }

  std::sort(conns.begin(), conns.end(), [](const connection& a, const connection& b) {
    if (a.dep_time != b.dep_time) return a.dep_time < b.dep_time;
    if (a.trip != b.trip) return a.trip < b.trip;
    return a.event_index < b.event_index;
  });
  return conns;
}

}  // namespace transit
