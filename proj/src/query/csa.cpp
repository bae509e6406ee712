#include "transit/core/errors.hpp"
#include "transit/query/engines.hpp"
#include "transit/timetable/graph_search.hpp"

namespace transit {

namespace {

enum class via : std::uint8_t { none, init, ride, edge };

}  // namespace

std::optional<journey> csa_query(const prepared_network& net, const query& q) {
  if (!net.augmented) {
    throw validation_error("csa_query requires an augmented transfer graph");
  }
  const auto& tt = *net.tt;
  const auto& g = *net.augmented;
  const auto num_stops = tt.stops.size();

  const auto init = dijkstra(g, {{q.source, q.dep_time}});
  const auto back = dijkstra(g, {{q.target, 0}}, true);

  std::vector<time_sec> arr(num_stops, k_never);
  std::vector<time_sec> thld(num_stops, k_never);
  std::vector<via> how(num_stops, via::none);
  std::vector<std::uint32_t> ride_conn(num_stops, k_none);
  std::vector<stop_idx> edge_from(num_stops, k_none);
  std::vector<time_sec> edge_time(num_stops, 0);

  for (stop_idx s = 0; s < num_stops; ++s) {
    if (init[s] < k_never) {
      arr[s] = init[s];
      thld[s] = init[s] + tt.buffer(s);
      how[s] = via::init;
    }
  }
  thld[q.source] = q.dep_time;  // standing at the source

  time_sec best = init[q.target];
  stop_idx best_stop = k_none;  // k_none: direct walk from the source

  std::vector<std::uint8_t> boarded(tt.trips.size(), 0);
  std::vector<std::uint32_t> board_conn(tt.trips.size(), k_none);

  const auto& conns = net.connections;
  for (std::uint32_t ci = 0; ci < conns.size(); ++ci) {
    const auto& c = conns[ci];
    if (c.dep_time >= best) {
      break;  // departures from here on cannot beat the best arrival
    }
    if (!boarded[c.trip]) {
      if (thld[c.dep_stop] <= c.dep_time) {
        boarded[c.trip] = 1;
        board_conn[c.trip] = ci;
      } else {
        continue;
      }
    }
    if (c.arr_time < arr[c.arr_stop]) {
      arr[c.arr_stop] = c.arr_time;
      thld[c.arr_stop] = std::min(thld[c.arr_stop], c.arr_time + tt.buffer(c.arr_stop));
      how[c.arr_stop] = via::ride;
      ride_conn[c.arr_stop] = ci;
      if (back[c.arr_stop] < k_never && c.arr_time + back[c.arr_stop] < best) {
        best = c.arr_time + back[c.arr_stop];
        best_stop = c.arr_stop;
      }
      // relax single transfer edges between stops
      for (const auto& e : g.out[c.arr_stop]) {
        if (e.to >= num_stops) {
          continue;
        }
        const auto na = c.arr_time + e.travel_time;
        if (na < arr[e.to]) {
          arr[e.to] = na;
          thld[e.to] = std::min(thld[e.to], na + tt.buffer(e.to));
          how[e.to] = via::edge;
          edge_from[e.to] = c.arr_stop;
          edge_time[e.to] = e.travel_time;
        }
      }
    }
  }

  if (best >= k_never) {
    return std::nullopt;
  }

  journey j;
  j.arrival = best;
  std::vector<journey_leg> rev;

  // final walk, then alternate rides and transfers back to the source
  stop_idx cur = best_stop;
  if (cur == k_none) {
    if (q.source != q.target) {
      journey_leg leg;
      leg.type = journey_leg::kind::walk;
      leg.from = q.source;
      leg.to = q.target;
      leg.walk_time = best - q.dep_time;
      leg.start_time = q.dep_time;
      leg.end_time = best;
      rev.push_back(leg);
    }
  } else {
    if (cur != q.target) {
      journey_leg leg;
      leg.type = journey_leg::kind::walk;
      leg.from = cur;
      leg.to = q.target;
      leg.walk_time = back[cur];
      leg.start_time = arr[cur];
      leg.end_time = best;
      rev.push_back(leg);
    }
    while (true) {
      if (how[cur] == via::ride) {
        const auto& alight_c = conns[ride_conn[cur]];
        const auto& board_c = conns[board_conn[alight_c.trip]];
        journey_leg leg;
        leg.type = journey_leg::kind::ride;
        leg.trip = alight_c.trip;
        leg.board = tt.trips[leg.trip].events[board_c.event_index];
        leg.alight = tt.trips[leg.trip].events[alight_c.event_index + 1];
        leg.start_time = net.dep_of(leg.board);
        leg.end_time = net.arr_of(leg.alight);
        rev.push_back(leg);
        ++j.num_trips;
        cur = board_c.dep_stop;
        continue;
      }
      if (how[cur] == via::edge) {
        const auto from = edge_from[cur];
        journey_leg leg;
        leg.type = journey_leg::kind::walk;
        leg.from = from;
        leg.to = cur;
        leg.walk_time = edge_time[cur];
        leg.start_time = arr[from];
        leg.end_time = arr[from] + edge_time[cur];
        leg.single_edge = true;
        rev.push_back(leg);
        cur = from;
        continue;
      }
      // via::init
      if (cur != q.source) {
        journey_leg leg;
        leg.type = journey_leg::kind::walk;
        leg.from = q.source;
        leg.to = cur;
        leg.walk_time = init[cur] - q.dep_time;
        leg.start_time = q.dep_time;
        leg.end_time = init[cur];
        rev.push_back(leg);
      }
      break;
    }
  }
  std::reverse(rev.begin(), rev.end());
  j.legs = std::move(rev);
  return j;
}

}  // namespace transit
