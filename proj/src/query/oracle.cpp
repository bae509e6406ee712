#include <queue>

#include "transit/query/engines.hpp"

namespace transit {

namespace {

enum class src : std::uint8_t { none, origin, carry, ride, walk };

struct round_state {
  std::vector<time_sec> label;
  std::vector<src> source;
  std::vector<vertex_idx> walk_pred;
  // ride info per stop
  std::vector<trip_idx> ride_trip;
  std::vector<event_idx> ride_board, ride_alight;

  explicit round_state(std::size_t v, std::size_t s)
      : label(v, k_never),
        source(v, src::none),
        walk_pred(v, k_none),
        ride_trip(s, k_none),
        ride_board(s, k_none),
        ride_alight(s, k_none) {}
};

// Dijkstra closure over the base graph, seeded with every finite label.
void close_walks(const transfer_graph& g, round_state& st) {
  using entry = std::pair<time_sec, vertex_idx>;
  std::priority_queue<entry, std::vector<entry>, std::greater<>> queue;
  for (vertex_idx v = 0; v < st.label.size(); ++v) {
    if (st.label[v] < k_never) {
      queue.emplace(st.label[v], v);
    }
  }
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > st.label[v]) {
      continue;
    }
    for (const auto& e : g.out[v]) {
      const auto nd = d + e.travel_time;
      if (nd < st.label[e.to]) {
        st.label[e.to] = nd;
        st.source[e.to] = src::walk;
        st.walk_pred[e.to] = v;
        queue.emplace(nd, e.to);
      }
    }
  }
}

}  // namespace

pareto_set oracle_query(const prepared_network& net, const query& q,
                        const engine_config& cfg) {
  const auto& tt = *net.tt;
  const auto& g = *net.base;
  const auto num_vertices = g.num_vertices();
  const auto num_stops = tt.stops.size();

  std::vector<round_state> rounds;
  rounds.emplace_back(num_vertices, num_stops);
  rounds[0].label[q.source] = q.dep_time;
  rounds[0].source[q.source] = src::origin;
  close_walks(g, rounds[0]);

  for (int k = 1; k <= cfg.max_rounds; ++k) {
    const auto& prev = rounds[k - 1];
    round_state cur(num_vertices, num_stops);
    for (vertex_idx v = 0; v < num_vertices; ++v) {
      cur.label[v] = prev.label[v];
      cur.source[v] = prev.label[v] < k_never ? src::carry : src::none;
    }

    bool improved = false;
    for (trip_idx t = 0; t < tt.trips.size(); ++t) {
      const auto& evs = tt.trips[t].events;
      std::uint32_t board = k_none;
      for (std::uint32_t i = 0; i < evs.size(); ++i) {
        const auto s = tt.events[evs[i]].stop;
        if (prev.label[s] >= k_never) {
          continue;
        }
        const auto thld =
            s == q.source && prev.label[s] == q.dep_time
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
        if (a < cur.label[s]) {
          cur.label[s] = a;
          cur.source[s] = src::ride;
          cur.walk_pred[s] = k_none;
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
    close_walks(g, cur);
    rounds.push_back(std::move(cur));
  }

  // collect Pareto entries with reconstructed journeys
  pareto_set result;
  time_sec best = k_never;
  for (std::size_t k = 0; k < rounds.size(); ++k) {
    const auto arrival = rounds[k].label[q.target];
    if (arrival >= best || arrival >= k_never) {
      continue;
    }
    best = arrival;

    journey j;
    j.arrival = arrival;
    std::vector<journey_leg> rev;
    auto kk = k;
    vertex_idx v = q.target;
    while (true) {
      const auto& st = rounds[kk];
      if (st.source[v] == src::walk) {
        // walk chains collapse into one leg; the chain realizes a shortest path
        const auto end_v = v;
        const auto end_t = st.label[v];
        while (st.source[v] == src::walk) {
          v = st.walk_pred[v];
        }
        journey_leg leg;
        leg.type = journey_leg::kind::walk;
        leg.from = v;
        leg.to = end_v;
        leg.walk_time = end_t - st.label[v];
        leg.start_time = st.label[v];
        leg.end_time = end_t;
        rev.push_back(leg);
        continue;
      }
      if (st.source[v] == src::ride) {
        journey_leg leg;
        leg.type = journey_leg::kind::ride;
        leg.trip = st.ride_trip[v];
        leg.board = st.ride_board[v];
        leg.alight = st.ride_alight[v];
        leg.start_time = net.dep_of(leg.board);
        leg.end_time = net.arr_of(leg.alight);
        rev.push_back(leg);
        ++j.num_trips;
        v = tt.events[leg.board].stop;
        --kk;
        continue;
      }
      if (st.source[v] == src::carry) {
        --kk;
        continue;
      }
      break;  // origin
    }
    std::reverse(rev.begin(), rev.end());
    j.legs = std::move(rev);
    result.insert(std::move(j));
  }
  return result;
}

}  // namespace transit
