#include "transit/timetable/graph_search.hpp"

#include <queue>

namespace transit {

std::vector<time_sec> dijkstra(const transfer_graph& g,
                               const std::vector<std::pair<vertex_idx, time_sec>>& seeds,
                               bool backward) {
  std::vector<time_sec> dist(g.num_vertices(), k_never);
  using entry = std::pair<time_sec, vertex_idx>;
  std::priority_queue<entry, std::vector<entry>, std::greater<>> queue;
  for (auto [v, d] : seeds) {
    if (d < dist[v]) {
      dist[v] = d;
      queue.emplace(d, v);
    }
  }
  const auto& adj = backward ? g.in : g.out;
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) {
      continue;
    }
    for (const auto& e : adj[v]) {
      const time_sec nd = d + e.travel_time;
      if (nd < dist[e.to]) {
        dist[e.to] = nd;
        queue.emplace(nd, e.to);
      }
    }
  }
  return dist;
}

std::vector<time_sec> dijkstra_from(const transfer_graph& g, vertex_idx source,
                                    bool backward) {
  return dijkstra(g, {{source, 0}}, backward);
}

std::vector<std::vector<time_sec>> stop_distance_matrix(const transfer_graph& g) {
  std::vector<std::vector<time_sec>> dist(g.num_stops);
  for (stop_idx s = 0; s < g.num_stops; ++s) {
    auto all = dijkstra_from(g, s);
    dist[s].assign(all.begin(), all.begin() + g.num_stops);
  }
  return dist;
}

}  // namespace transit
