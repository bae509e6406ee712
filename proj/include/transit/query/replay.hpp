#pragma once

#include <optional>
#include <string>

#include "transit/query/engines.hpp"

namespace transit {

// Replays a journey leg by leg against the delayed timetable: walk legs must
// realize shortest-path distances (or literal edges when single_edge is set)
// in the given graph, boardings must respect buffer times, and the final
// arrival must match. Returns an explanation of the first violation.
std::optional<std::string> replay_journey(const journey& j, const prepared_network& net,
                                          const query& q, const transfer_graph& walk_graph);

}  // namespace transit
