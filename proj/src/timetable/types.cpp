#include "transit/timetable/types.hpp"

#include <algorithm>

#include "transit/core/errors.hpp"
#include "transit/timetable/connections.hpp"

namespace transit {

std::size_t transfer_graph::num_edges() const {
  std::size_t n = 0;
  for (const auto& edges : out) {
    n += edges.size();
  }
  return n;
}

void transfer_graph::ensure_vertex(vertex_idx v) {
  if (v >= out.size()) {
    out.resize(v + 1);
    in.resize(v + 1);
  }
}

void transfer_graph::add_edge(vertex_idx from, vertex_idx to, time_sec travel_time) {
  if (travel_time < 1) {
    throw validation_error("transfer edge (" + std::to_string(from) + "," +
                           std::to_string(to) + ") has travel_time " +
                           std::to_string(travel_time) + " < 1");
  }
  ensure_vertex(std::max(from, to));
  out[from].push_back({to, travel_time});
  in[to].push_back({from, travel_time});
}

void transfer_graph::sort_by_travel_time() {
  auto by_time = [](const transfer_edge& a, const transfer_edge& b) {
    return a.travel_time != b.travel_time ? a.travel_time < b.travel_time : a.to < b.to;
  };
  for (auto& edges : out) {
    std::sort(edges.begin(), edges.end(), by_time);
  }
  for (auto& edges : in) {
    std::sort(edges.begin(), edges.end(), by_time);
  }
}

bool timetable::has_nonzero_buffer() const {
  for (const auto& s : stops) {
    if (s.buffer_time > 0) {
      return true;
    }
  }
  return false;
}

void validate_and_finalize(timetable& tt) {
  const auto n_stops = tt.stops.size();
  const auto n_events = tt.events.size();

  for (std::size_t s = 0; s < n_stops; ++s) {
    if (tt.stops[s].buffer_time < 0) {
      throw validation_error("stop " + std::to_string(s) + " has negative buffer_time");
    }
  }

  for (std::size_t t = 0; t < tt.trips.size(); ++t) {
    const auto& tr = tt.trips[t];
    const std::string name = "trip " + std::to_string(t);
    if (tr.events.empty()) {
      throw validation_error(name + " has no stop events");
    }
    if (tr.route >= tt.routes.size()) {
      throw validation_error(name + " references unknown route " + std::to_string(tr.route));
    }
    const auto& seq = tt.routes[tr.route].stop_sequence;
    if (tr.events.size() != seq.size()) {
      throw validation_error(name + " visits " + std::to_string(tr.events.size()) +
                             " stops but its route has " + std::to_string(seq.size()));
    }
    for (std::size_t i = 0; i < tr.events.size(); ++i) {
      if (tr.events[i] >= n_events) {
        throw validation_error(name + " references unknown stop event");
      }
      const auto& ev = tt.events[tr.events[i]];
      if (ev.trip != t || ev.index_in_trip != i) {
        throw validation_error(name + " event cross-reference broken at index " +
                               std::to_string(i));
      }
      if (ev.stop >= n_stops) {
        throw validation_error(name + " serves unknown stop " + std::to_string(ev.stop));
      }
      if (ev.stop != seq[i]) {
        throw validation_error(name + " deviates from its route stop sequence at index " +
                               std::to_string(i));
      }
      if (ev.arr < 0 || ev.dep > k_day_max) {
        throw validation_error(name + " has event times outside [0," +
                               std::to_string(k_day_max) + "]");
      }
      if (ev.arr > ev.dep) {
        throw validation_error(name + " has arr > dep at stop index " + std::to_string(i));
      }
      // Strict increase between events keeps every connection's dep < arr.
      if (i > 0 && tt.events[tr.events[i - 1]].dep >= ev.arr) {
        throw validation_error(name + " violates time monotonicity between stop indexes " +
                               std::to_string(i - 1) + " and " + std::to_string(i));
      }
    }
  }

  for (std::size_t r = 0; r < tt.routes.size(); ++r) {
    auto& ro = tt.routes[r];
    for (auto s : ro.stop_sequence) {
      if (s >= n_stops) {
        throw validation_error("route " + std::to_string(r) + " references unknown stop " +
                               std::to_string(s));
      }
    }
    for (auto t : ro.trips) {
      if (t >= tt.trips.size() || tt.trips[t].route != r) {
        throw validation_error("route " + std::to_string(r) + " trip list broken");
      }
    }
    std::sort(ro.trips.begin(), ro.trips.end(), [&](trip_idx a, trip_idx b) {
      const auto da = tt.events[tt.trips[a].events.front()].dep;
      const auto db = tt.events[tt.trips[b].events.front()].dep;
      return da != db ? da < db : a < b;
    });
  }

  if (tt.graph.out.size() < n_stops) {
    tt.graph.ensure_vertex(n_stops == 0 ? 0 : static_cast<vertex_idx>(n_stops - 1));
  }
  tt.graph.num_stops = static_cast<stop_idx>(n_stops);
  tt.graph.sort_by_travel_time();

  tt.connections = build_connections(tt);

  tt.events_at_stop.assign(n_stops, {});
  for (event_idx e = 0; e < n_events; ++e) {
    tt.events_at_stop[tt.events[e].stop].push_back(e);
  }
  for (auto& evs : tt.events_at_stop) {
    std::sort(evs.begin(), evs.end(), [&](event_idx a, event_idx b) {
      return tt.events[a].dep != tt.events[b].dep ? tt.events[a].dep < tt.events[b].dep
                                                  : a < b;
    });
  }
}

}  // namespace transit
