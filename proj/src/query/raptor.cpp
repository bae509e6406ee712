#include "transit/core/errors.hpp"
#include "transit/query/engines.hpp"
#include "transit/timetable/graph_search.hpp"

namespace transit {

namespace {

enum class src : std::uint8_t { none, carry, ride, edge };

struct raptor_round {
  std::vector<time_sec> label;       // post-transfer labels per stop
  std::vector<src> source;
  std::vector<time_sec> ride;        // ride-only arrivals this round
  std::vector<trip_idx> ride_trip;
  std::vector<event_idx> ride_board, ride_alight;
  std::vector<stop_idx> edge_from;
  std::vector<time_sec> edge_time;

  explicit raptor_round(std::size_t s)
      : label(s, k_never),
        source(s, src::none),
        ride(s, k_never),
        ride_trip(s, k_none),
        ride_board(s, k_none),
        ride_alight(s, k_none),
        edge_from(s, k_none),
        edge_time(s, 0) {}
};

}  // namespace

pareto_set raptor_query(const prepared_network& net, const query& q,
                        const engine_config& cfg) {
  if (!net.augmented) {
    throw validation_error("raptor_query requires an augmented transfer graph");
  }
  const auto& tt = *net.tt;
  const auto& g = *net.augmented;
  const auto num_stops = tt.stops.size();

  const auto init = dijkstra(g, {{q.source, q.dep_time}});
  const auto back = dijkstra(g, {{q.target, 0}}, true);

  std::vector<raptor_round> rounds;
  rounds.emplace_back(num_stops);
  for (stop_idx s = 0; s < num_stops; ++s) {
    rounds[0].label[s] = init[s];
    rounds[0].source[s] = init[s] < k_never ? src::carry : src::none;
  }

  struct entry_info {
    time_sec arrival;
    int round;
    stop_idx final_stop;  // k_none when the round-0 walk reaches the target
  };
  std::vector<entry_info> entries;
  time_sec best = k_never;
  if (init[q.target] < k_never) {
    best = init[q.target];
    entries.push_back({best, 0, k_none});
  }

  for (int k = 1; k <= cfg.max_rounds; ++k) {
    const auto& prev = rounds[k - 1];
    raptor_round cur(num_stops);

    bool improved = false;
    for (trip_idx t = 0; t < tt.trips.size(); ++t) {
      const auto& evs = tt.trips[t].events;
      std::uint32_t board = k_none;
      for (std::uint32_t i = 0; i < evs.size(); ++i) {
        const auto s = tt.events[evs[i]].stop;
        if (prev.label[s] >= k_never) {
          continue;
        }
        const auto thld = s == q.source && prev.label[s] == q.dep_time
                              ? q.dep_time
                              : prev.label[s] + tt.buffer(s);
        if (net.dep_of(evs[i]) >= thld) {
          board = i;
          break;
        }
      }
      if (board == k_none) {
        continue;
      }
      for (auto j = board + 1; j < evs.size(); ++j) {
        const auto s = tt.events[evs[j]].stop;
        const auto a = net.arr_of(evs[j]);
        if (a < cur.ride[s]) {
          cur.ride[s] = a;
          cur.ride_trip[s] = t;
          cur.ride_board[s] = evs[board];
          cur.ride_alight[s] = evs[j];
          improved = true;
        }
      }
    }
    if (!improved) {
      break;
    }

    // target arrival with exactly k trips, before transfer relaxation
    for (stop_idx s = 0; s < num_stops; ++s) {
      if (cur.ride[s] < k_never && back[s] < k_never && cur.ride[s] + back[s] < best) {
        best = cur.ride[s] + back[s];
        entries.push_back({best, k, s});
      }
    }

    // transfer relaxation: carry over, adopt rides, relax single edges
    for (stop_idx s = 0; s < num_stops; ++s) {
      cur.label[s] = prev.label[s];
      cur.source[s] = prev.label[s] < k_never ? src::carry : src::none;
      if (cur.ride[s] < cur.label[s]) {
        cur.label[s] = cur.ride[s];
        cur.source[s] = src::ride;
      }
    }
    for (stop_idx s = 0; s < num_stops; ++s) {
      if (cur.ride[s] >= k_never) {
        continue;
      }
      for (const auto& e : g.out[s]) {
        if (cfg.early_pruning && cur.ride[s] + e.travel_time >= best) {
          break;  // edges are sorted by travel time
        }
        if (e.to >= num_stops) {
          continue;
        }
        const auto na = cur.ride[s] + e.travel_time;
        if (na < cur.label[e.to]) {
          cur.label[e.to] = na;
          cur.source[e.to] = src::edge;
          cur.edge_from[e.to] = s;
          cur.edge_time[e.to] = e.travel_time;
        }
      }
    }
    rounds.push_back(std::move(cur));
  }

  // reconstruct one journey per Pareto entry
  pareto_set result;
  for (const auto& en : entries) {
    journey j;
    j.arrival = en.arrival;
    std::vector<journey_leg> rev;
    if (en.final_stop == k_none) {
      if (q.source != q.target) {
        journey_leg leg;
        leg.type = journey_leg::kind::walk;
        leg.from = q.source;
        leg.to = q.target;
        leg.walk_time = en.arrival - q.dep_time;
        leg.start_time = q.dep_time;
        leg.end_time = en.arrival;
        rev.push_back(leg);
      }
    } else {
      auto kk = static_cast<std::size_t>(en.round);
      stop_idx s = en.final_stop;
      if (s != q.target) {
        journey_leg leg;
        leg.type = journey_leg::kind::walk;
        leg.from = s;
        leg.to = q.target;
        leg.walk_time = back[s];
        leg.start_time = rounds[kk].ride[s];
        leg.end_time = en.arrival;
        rev.push_back(leg);
      }
      // the final stop was reached by a ride in round kk
      bool via_ride = true;
      while (true) {
        const auto& st = rounds[kk];
        if (via_ride || st.source[s] == src::ride) {
          journey_leg leg;
          leg.type = journey_leg::kind::ride;
          leg.trip = st.ride_trip[s];
          leg.board = st.ride_board[s];
          leg.alight = st.ride_alight[s];
          leg.start_time = net.dep_of(leg.board);
          leg.end_time = net.arr_of(leg.alight);
          rev.push_back(leg);
          ++j.num_trips;
          s = tt.events[leg.board].stop;
          --kk;
          via_ride = false;
          if (kk == 0) {
            if (s != q.source) {
              journey_leg walk;
              walk.type = journey_leg::kind::walk;
              walk.from = q.source;
              walk.to = s;
              walk.walk_time = init[s] - q.dep_time;
              walk.start_time = q.dep_time;
              walk.end_time = init[s];
              rev.push_back(walk);
            }
            break;
          }
          continue;
        }
        if (st.source[s] == src::edge) {
          journey_leg leg;
          leg.type = journey_leg::kind::walk;
          leg.from = st.edge_from[s];
          leg.to = s;
          leg.walk_time = st.edge_time[s];
          leg.single_edge = true;
          leg.start_time = st.ride[st.edge_from[s]];
          leg.end_time = leg.start_time + leg.walk_time;
          rev.push_back(leg);
          s = st.edge_from[s];
          via_ride = true;  // edge relaxations start from this round's rides
          continue;
        }
        if (st.source[s] == src::carry) {
          --kk;
          if (kk == 0) {
            if (s != q.source) {
              journey_leg walk;
              walk.type = journey_leg::kind::walk;
              walk.from = q.source;
              walk.to = s;
              walk.walk_time = init[s] - q.dep_time;
              walk.start_time = q.dep_time;
              walk.end_time = init[s];
              rev.push_back(walk);
            }
            break;
          }
          continue;
        }
        break;
      }
    }
    std::reverse(rev.begin(), rev.end());
    j.legs = std::move(rev);
    result.insert(std::move(j));
  }
  return result;
}

}  // namespace transit
