#pragma once

#include <utility>
#include <vector>

#include "transit/timetable/types.hpp"

namespace transit {

// Multi-source Dijkstra over the transfer graph. Seeds carry absolute values
// (times or distances); backward searches use the in-edge lists. Unreached
// vertices hold k_never.
std::vector<time_sec> dijkstra(const transfer_graph& g,
                               const std::vector<std::pair<vertex_idx, time_sec>>& seeds,
                               bool backward = false);

std::vector<time_sec> dijkstra_from(const transfer_graph& g, vertex_idx source,
                                    bool backward = false);

// dist[s][t] between all stop pairs (paths may pass through auxiliary
// vertices). dist[s][s] == 0.
std::vector<std::vector<time_sec>> stop_distance_matrix(const transfer_graph& g);

}  // namespace transit
