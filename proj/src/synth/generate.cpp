#include "transit/synth/generate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "transit/core/errors.hpp"
#include "transit/core/rng.hpp"

namespace transit {

namespace {

struct point {
  double x, y;
};

double dist(const point& a, const point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

timetable generate_synthetic(const synth_params& p, std::uint64_t seed) {
  if (p.num_stops < 2 || p.num_routes == 0 || p.trips_per_route == 0) {
    throw validation_error("synthetic network needs at least 2 stops, 1 route, 1 trip");
  }
  if (p.min_route_len < 2 || p.max_route_len < p.min_route_len) {
    throw validation_error("route length bounds are invalid");
  }

  rng64 rng(seed);
  timetable tt;

  std::vector<point> pos(p.num_stops);
  for (std::uint32_t s = 0; s < p.num_stops; ++s) {
    pos[s] = {rng.unit(), rng.unit()};
    tt.stops.push_back({"s" + std::to_string(s), p.buffer_time});
  }

  // nearest-neighbour lists drive both routes and walk edges
  std::vector<std::vector<stop_idx>> near(p.num_stops);
  for (stop_idx s = 0; s < p.num_stops; ++s) {
    std::vector<stop_idx> order;
    for (stop_idx t = 0; t < p.num_stops; ++t) {
      if (t != s) {
        order.push_back(t);
      }
    }
    std::sort(order.begin(), order.end(), [&](stop_idx a, stop_idx b) {
      const auto da = dist(pos[s], pos[a]);
      const auto db = dist(pos[s], pos[b]);
      return da != db ? da < db : a < b;
    });
    near[s] = std::move(order);
  }

  // routes: random walks preferring nearby unvisited stops
  const auto max_len = std::min(p.max_route_len, p.num_stops);
  for (std::uint32_t r = 0; r < p.num_routes; ++r) {
    const auto len = p.min_route_len +
                     static_cast<std::uint32_t>(rng.below(max_len - p.min_route_len + 1));
    route ro;
    std::set<stop_idx> used;
    auto cur = static_cast<stop_idx>(rng.below(p.num_stops));
    ro.stop_sequence.push_back(cur);
    used.insert(cur);
    while (ro.stop_sequence.size() < len) {
      std::vector<stop_idx> cand;
      for (auto n : near[cur]) {
        if (!used.count(n)) {
          cand.push_back(n);
          if (cand.size() == 5) {
            break;
          }
        }
      }
      if (cand.empty()) {
        break;
      }
      cur = cand[rng.below(cand.size())];
      ro.stop_sequence.push_back(cur);
      used.insert(cur);
    }
    tt.routes.push_back(std::move(ro));
  }

  // trips: regular headways with jitter, ride times scale with distance
  for (route_idx r = 0; r < tt.routes.size(); ++r) {
    const auto& seq = tt.routes[r].stop_sequence;
    const auto headway = std::max<time_sec>(300, p.departure_span /
                                                     static_cast<time_sec>(p.trips_per_route));
    const auto base = p.first_departure + static_cast<time_sec>(rng.below(600));
    for (std::uint32_t k = 0; k < p.trips_per_route; ++k) {
      const auto t = static_cast<trip_idx>(tt.trips.size());
      tt.trips.push_back({r, {}});
      tt.routes[r].trips.push_back(t);
      auto dep = base + static_cast<time_sec>(k) * headway +
                 static_cast<time_sec>(rng.below(headway / 4 + 1));
      for (std::size_t i = 0; i < seq.size(); ++i) {
        stop_event ev;
        ev.stop = seq[i];
        ev.trip = t;
        ev.index_in_trip = static_cast<std::uint32_t>(i);
        if (i == 0) {
          ev.arr = dep;
          ev.dep = dep;
        } else {
          const auto ride = std::max<time_sec>(
              120, static_cast<time_sec>(dist(pos[seq[i - 1]], pos[seq[i]]) * 1200.0));
          const auto arr = tt.events[tt.trips[t].events.back()].dep + ride;
          const auto dwell = i + 1 == seq.size() ? 0 : 30;
          ev.arr = arr;
          ev.dep = arr + dwell;
        }
        tt.trips[t].events.push_back(static_cast<event_idx>(tt.events.size()));
        tt.events.push_back(ev);
      }
    }
  }

  // walk edges to nearby stops, both directions
  tt.graph.num_stops = p.num_stops;
  tt.graph.ensure_vertex(p.num_stops - 1);
  std::set<std::pair<stop_idx, stop_idx>> edges;
  const auto k_out = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(
                                                    std::llround(p.transfer_degree / 2.0)));
  for (stop_idx s = 0; s < p.num_stops; ++s) {
    for (std::uint32_t i = 0; i < k_out && i < near[s].size(); ++i) {
      const auto t = near[s][i];
      const auto w = std::max<time_sec>(
          60, static_cast<time_sec>(dist(pos[s], pos[t]) * 3600.0));
      if (edges.emplace(s, t).second) {
        tt.graph.add_edge(s, t, w);
      }
      if (edges.emplace(t, s).second) {
        tt.graph.add_edge(t, s, w);
      }
    }
  }

  validate_and_finalize(tt);
  return tt;
}

}  // namespace transit
