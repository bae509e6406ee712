#include "transit/query/prepared.hpp"

#include <algorithm>
#include <map>

namespace transit {

prepared_network prepare(const timetable& tt, const delay_scenario& sc) {
  prepared_network net;
  net.tt = &tt;
  net.scenario = sc;
  net.base = &tt.graph;

  const auto n = tt.events.size();
  net.ev_arr.resize(n);
  net.ev_dep.resize(n);
  for (event_idx e = 0; e < n; ++e) {
    const auto dt = apply_delay(tt.events[e], sc);
    net.ev_arr[e] = dt.arr;
    net.ev_dep[e] = dt.dep;
  }

  net.connections = tt.connections;
  for (auto& c : net.connections) {
    const auto dep_ev = tt.trips[c.trip].events[c.event_index];
    const auto arr_ev = tt.trips[c.trip].events[c.event_index + 1];
    c.dep_time = net.ev_dep[dep_ev];
    c.arr_time = net.ev_arr[arr_ev];
  }
  std::sort(net.connections.begin(), net.connections.end(),
            [](const connection& a, const connection& b) {
              if (a.dep_time != b.dep_time) return a.dep_time < b.dep_time;
              if (a.trip != b.trip) return a.trip < b.trip;
              return a.event_index < b.event_index;
            });

  // time-dependent adjacency with dominated connections filtered
  std::map<std::pair<stop_idx, stop_idx>, std::vector<td_edge::hop>> pairs;
  for (const auto& c : net.connections) {
    pairs[{c.dep_stop, c.arr_stop}].push_back(
        {c.dep_time, c.arr_time, c.trip, c.event_index});
  }
  net.td_adj.assign(tt.stops.size(), {});
  for (auto& [key, hops] : pairs) {
    std::sort(hops.begin(), hops.end(), [](const td_edge::hop& a, const td_edge::hop& b) {
      if (a.dep != b.dep) return a.dep < b.dep;
      return a.arr < b.arr;
    });
    // keep the staircase: drop a hop if a later-departing one arrives no later
    std::vector<td_edge::hop> kept;
    time_sec best_arr = k_never;
    for (auto it = hops.rbegin(); it != hops.rend(); ++it) {
      if (it->arr < best_arr) {
        kept.push_back(*it);
        best_arr = it->arr;
      }
    }
    std::reverse(kept.begin(), kept.end());
    td_edge e;
    e.to = key.second;
    e.hops = std::move(kept);
    net.td_adj[key.first].push_back(std::move(e));
  }
  return net;
}

void attach_stop_shortcuts(prepared_network& net, const stop_shortcut_set& ss) {
  net.augmented = merge_into_transfer_graph(ss, *net.base);
}

void attach_event_shortcuts(prepared_network& net, const event_shortcut_set& es) {
  net.shortcuts = &es;
}

}  // namespace transit
