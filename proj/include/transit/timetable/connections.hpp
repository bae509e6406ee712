#pragma once

#include <vector>

#include "transit/timetable/types.hpp"

namespace transit {

// One connection per consecutive event pair within each trip, sorted by
// (dep_time, trip, event_index). Input must already be validated.
std::vector<connection> build_connections(const timetable& tt);

}  // namespace transit
