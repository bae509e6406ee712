#include "transit/timetable/closure.hpp"

#include <unordered_map>

namespace transit {

std::optional<std::array<vertex_idx, 3>> check_transitive_closure(const transfer_graph& g) {
  std::unordered_map<std::uint64_t, time_sec> min_weight;
  min_weight.reserve(g.num_edges());
  auto key = [](vertex_idx u, vertex_idx w) {
    return (static_cast<std::uint64_t>(u) << 32) | w;
  };
  for (vertex_idx u = 0; u < g.num_vertices(); ++u) {
    for (const auto& e : g.out[u]) {
      auto [it, inserted] = min_weight.try_emplace(key(u, e.to), e.travel_time);
      if (!inserted && e.travel_time < it->second) {
        it->second = e.travel_time;
      }
    }
  }

  // In the in-edge list of b, edge.to holds the edge's source vertex a.
  for (vertex_idx b = 0; b < g.num_vertices(); ++b) {
    for (const auto& ab : g.in[b]) {
      const vertex_idx a = ab.to;
      for (const auto& bc : g.out[b]) {
        const vertex_idx c = bc.to;
        if (a == c) {
          continue;  // 2-cycles do not demand self-loops
        }
        auto it = min_weight.find(key(a, c));
        if (it == min_weight.end() || it->second > ab.travel_time + bc.travel_time) {
          return std::array<vertex_idx, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace transit
