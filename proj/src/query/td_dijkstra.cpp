#include <algorithm>
#include <queue>

#include "transit/core/errors.hpp"
#include "transit/query/engines.hpp"

namespace transit {

namespace {

enum class via : std::uint8_t { none, origin, walk, ride };

}  // namespace

std::optional<journey> td_dijkstra_query(const prepared_network& net, const query& q) {
  const auto& tt = *net.tt;
  if (tt.has_nonzero_buffer()) {
    throw refusal_error(
        "td_dijkstra requires zero buffer times; dominated-connection filtering "
        "is unsound otherwise");
  }
  const auto& g = *net.base;
  const auto num_vertices = g.num_vertices();
  const auto num_stops = tt.stops.size();

  std::vector<time_sec> label(num_vertices, k_never);
  std::vector<via> how(num_vertices, via::none);
  std::vector<vertex_idx> pred(num_vertices, k_none);
  std::vector<time_sec> pred_walk(num_vertices, 0);
  struct hop_ref {
    trip_idx trip = k_none;
    std::uint32_t event_index = 0;
  };
  std::vector<hop_ref> pred_hop(num_vertices);

  using entry = std::pair<time_sec, vertex_idx>;
  std::priority_queue<entry, std::vector<entry>, std::greater<>> queue;
  label[q.source] = q.dep_time;
  how[q.source] = via::origin;
  queue.emplace(q.dep_time, q.source);

  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > label[v]) {
      continue;
    }
    if (v == q.target) {
      break;
    }
    for (const auto& e : g.out[v]) {
      const auto nd = d + e.travel_time;
      if (nd < label[e.to]) {
        label[e.to] = nd;
        how[e.to] = via::walk;
        pred[e.to] = v;
        pred_walk[e.to] = e.travel_time;
        queue.emplace(nd, e.to);
      }
    }
    if (v < num_stops) {
      for (const auto& te : net.td_adj[v]) {
        // first hop departing at or after d; arrivals increase with departures
        auto it = std::lower_bound(te.hops.begin(), te.hops.end(), d,
                                   [](const td_edge::hop& h, time_sec t) {
                                     return h.dep < t;
                                   });
        if (it == te.hops.end()) {
          continue;
        }
        if (it->arr < label[te.to]) {
          label[te.to] = it->arr;
          how[te.to] = via::ride;
          pred[te.to] = v;
          pred_hop[te.to] = {it->trip, it->event_index};
          queue.emplace(it->arr, te.to);
        }
      }
    }
  }

  if (label[q.target] >= k_never) {
    return std::nullopt;
  }

  journey j;
  j.arrival = label[q.target];

  // backtrack, merging walk chains and consecutive same-trip hops
  struct step {
    via kind;
    vertex_idx from, to;
    time_sec walk;
    hop_ref hop;
  };
  std::vector<step> steps;
  for (vertex_idx v = q.target; how[v] != via::origin;) {
    steps.push_back({how[v], pred[v], v, pred_walk[v], pred_hop[v]});
    v = pred[v];
  }
  std::reverse(steps.begin(), steps.end());

  std::vector<journey_leg> legs;
  for (std::size_t i = 0; i < steps.size();) {
    if (steps[i].kind == via::walk) {
      auto from = steps[i].from;
      time_sec total = 0;
      auto jx = i;
      while (jx < steps.size() && steps[jx].kind == via::walk) {
        total += steps[jx].walk;
        ++jx;
      }
      journey_leg leg;
      leg.type = journey_leg::kind::walk;
      leg.from = from;
      leg.to = steps[jx - 1].to;
      leg.walk_time = total;
      leg.start_time = label[from];
      leg.end_time = label[from] + total;
      legs.push_back(leg);
      i = jx;
    } else {
      const auto trip = steps[i].hop.trip;
      const auto board_index = steps[i].hop.event_index;
      auto last_index = board_index;
      auto jx = i;
      while (jx + 1 < steps.size() && steps[jx + 1].kind == via::ride &&
             steps[jx + 1].hop.trip == trip &&
             steps[jx + 1].hop.event_index == last_index + 1) {
        ++jx;
        ++last_index;
      }
      journey_leg leg;
      leg.type = journey_leg::kind::ride;
      leg.trip = trip;
      leg.board = tt.trips[trip].events[board_index];
      leg.alight = tt.trips[trip].events[last_index + 1];
      leg.start_time = net.dep_of(leg.board);
      leg.end_time = net.arr_of(leg.alight);
      legs.push_back(leg);
      ++j.num_trips;
      i = jx + 1;
    }
  }
  j.legs = std::move(legs);
  return j;
}

}  // namespace transit
