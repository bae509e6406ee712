#pragma once

#include <array>
#include <optional>

#include "transit/timetable/types.hpp"

namespace transit {

// A graph is transitively closed if for every edge pair (a,b), (b,c) with
// a != c the edge (a,c) exists with travel time at most the sum of the two.
// Returns a violating triple {a, b, c}, or nullopt if the graph is closed.
std::optional<std::array<vertex_idx, 3>> check_transitive_closure(const transfer_graph& g);

}  // namespace transit
