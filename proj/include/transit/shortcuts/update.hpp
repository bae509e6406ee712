#pragma once

#include "transit/delay/scenario.hpp"
#include "transit/shortcuts/event_set.hpp"
#include "transit/timetable/types.hpp"

namespace transit {

struct update_report {
  std::size_t removed_infeasible = 0;  // arrival after the delayed departure
  std::size_t removed_interval = 0;    // realized origin delay outside [dmin, dmax]
  std::size_t added_replacements = 0;
  std::size_t origins_searched = 0;

  std::size_t removed_total() const { return removed_infeasible + removed_interval; }
};

// Deactivates shortcuts that are physically infeasible under the delayed
// times or whose realized origin arrival delay falls outside the annotated
// interval. Expects a freshly built or loaded set (no replacements yet).
update_report update_basic(event_shortcut_set& es, const delay_scenario& sc,
                           const timetable& tt);

// Basic update followed by a replacement search: for every origin event that
// lost a shortcut, a Dijkstra over the transfer graph re-targets each lost
// destination stop with the earliest event still catchable there.
update_report update_with_replacement(event_shortcut_set& es, const delay_scenario& sc,
                                      const timetable& tt);

}  // namespace transit
