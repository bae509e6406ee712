#include "transit/core/errors.hpp"
#include "transit/query/engines.hpp"
#include "transit/timetable/graph_search.hpp"

namespace transit {

namespace {

struct tb_label {
  trip_idx trip;
  std::uint32_t board;       // boarding index within the trip
  std::uint32_t parent;      // label index in the previous round, k_none for round 1
  event_idx parent_alight;   // alight event that led here
  event_idx board_event;
  time_sec walk_time;        // transfer walk, 0 for same-stop changes
  bool via_shortcut;
};

}  // namespace

pareto_set tb_query(const prepared_network& net, const query& q, const engine_config& cfg) {
  if (net.shortcuts == nullptr) {
    throw validation_error("tb_query requires an attached event shortcut set");
  }
  const auto& tt = *net.tt;
  const auto& g = *net.base;
  const auto& es = *net.shortcuts;

  const auto init = dijkstra(g, {{q.source, q.dep_time}});
  const auto back = dijkstra(g, {{q.target, 0}}, true);

  pareto_set result;
  if (init[q.target] < k_never) {
    journey j;
    j.arrival = init[q.target];
    if (q.source != q.target) {
      journey_leg leg;
      leg.type = journey_leg::kind::walk;
      leg.from = q.source;
      leg.to = q.target;
      leg.walk_time = init[q.target] - q.dep_time;
      leg.start_time = q.dep_time;
      leg.end_time = init[q.target];
      j.legs.push_back(leg);
    }
    result.insert(std::move(j));
  }

  std::vector<std::uint32_t> min_board(tt.trips.size());
  for (trip_idx t = 0; t < tt.trips.size(); ++t) {
    min_board[t] = static_cast<std::uint32_t>(tt.trips[t].events.size());
  }

  // round 1 seeds from source walks
  std::vector<std::vector<tb_label>> rounds(1);
  for (trip_idx t = 0; t < tt.trips.size(); ++t) {
    const auto& evs = tt.trips[t].events;
    for (std::uint32_t i = 0; i < evs.size(); ++i) {
      const auto s = tt.events[evs[i]].stop;
      if (init[s] >= k_never) {
        continue;
      }
      const auto thld = s == q.source ? q.dep_time : init[s] + tt.buffer(s);
      if (net.dep_of(evs[i]) >= thld) {
        rounds[0].push_back({t, i, k_none, k_none, evs[i],
                             s == q.source ? 0 : init[s] - q.dep_time, false});
        break;
      }
    }
  }

  struct best_entry {
    time_sec arrival = k_never;
    int round = 0;
    std::uint32_t label = k_none;
    event_idx alight = k_none;
  };
  std::vector<best_entry> found;

  const bool use_annotations = cfg.activation == tb_activation::use_annotations;

  for (int k = 1; k <= cfg.max_rounds && !rounds[k - 1].empty(); ++k) {
    if (static_cast<int>(rounds.size()) <= k) {
      rounds.emplace_back();
    }
    auto& next = rounds[k];
    const auto& curr = rounds[k - 1];
    for (std::uint32_t li = 0; li < curr.size(); ++li) {
      const auto lab = curr[li];  // by value: next.push_back may reallocate
      if (lab.board >= min_board[lab.trip]) {
        continue;
      }
      const auto old_bound = min_board[lab.trip];
      min_board[lab.trip] = lab.board;
      const auto& evs = tt.trips[lab.trip].events;
      const auto last = std::min<std::uint32_t>(old_bound,
                                                static_cast<std::uint32_t>(evs.size()) - 1);
      for (auto j = lab.board + 1; j <= last; ++j) {
        const auto alight = evs[j];
        const auto p = tt.events[alight].stop;
        const auto reach = net.arr_of(alight);

        if (back[p] < k_never && reach + back[p] < k_never) {
          const auto cand = reach + back[p];
          if (found.empty() || cand < found.back().arrival) {
            bool better = true;
            for (const auto& f : found) {
              if (f.arrival <= cand) {
                better = false;
                break;
              }
            }
            if (better) {
              found.push_back({cand, k, li, alight});
            }
          }
        }

        // same-stop trip changes need no shortcut
        for (auto cand_ev : tt.events_at_stop[p]) {
          const auto& ce = tt.events[cand_ev];
          if (ce.trip == lab.trip) {
            continue;
          }
          if (net.dep_of(cand_ev) >= reach + tt.buffer(p) &&
              ce.index_in_trip < min_board[ce.trip]) {
            next.push_back({ce.trip, ce.index_in_trip, li, alight, cand_ev, 0, false});
          }
        }

        // event-level shortcut transfers
        auto try_shortcut = [&](const event_shortcut& r) {
          const auto& eb = tt.events[r.to_event];
          if (net.arr_of(alight) + r.travel_time + tt.buffer(eb.stop) >
              net.dep_of(r.to_event)) {
            return;  // not physically feasible under the delayed times
          }
          if (eb.index_in_trip >= min_board[eb.trip]) {
            return;
          }
          next.push_back({eb.trip, eb.index_in_trip, li, alight, r.to_event,
                          r.travel_time, true});
        };
        if (use_annotations) {
          es.for_each_active_from(alight, try_shortcut);
        } else {
          for (auto ri = es.first[alight]; ri < es.first[alight + 1]; ++ri) {
            try_shortcut(es.records[ri]);
          }
          for (const auto& r : es.extra) {
            if (r.from_event == alight) {
              try_shortcut(r);
            }
          }
        }
      }
    }
  }

  // journeys for the Pareto frontier
  for (const auto& f : found) {
    journey j;
    j.arrival = f.arrival;
    std::vector<journey_leg> rev;
    const auto alight_stop = tt.events[f.alight].stop;
    if (alight_stop != q.target) {
      journey_leg leg;
      leg.type = journey_leg::kind::walk;
      leg.from = alight_stop;
      leg.to = q.target;
      leg.walk_time = back[alight_stop];
      leg.start_time = net.arr_of(f.alight);
      leg.end_time = f.arrival;
      rev.push_back(leg);
    }
    auto kk = f.round;
    auto li = f.label;
    auto alight = f.alight;
    while (li != k_none) {
      const auto& lab = rounds[kk - 1][li];
      journey_leg ride;
      ride.type = journey_leg::kind::ride;
      ride.trip = lab.trip;
      ride.board = lab.board_event;
      ride.alight = alight;
      ride.start_time = net.dep_of(lab.board_event);
      ride.end_time = net.arr_of(alight);
      rev.push_back(ride);
      ++j.num_trips;
      if (lab.parent == k_none) {
        if (lab.walk_time > 0) {
          journey_leg walk;
          walk.type = journey_leg::kind::walk;
          walk.from = q.source;
          walk.to = tt.events[lab.board_event].stop;
          walk.walk_time = lab.walk_time;
          walk.start_time = q.dep_time;
          walk.end_time = q.dep_time + lab.walk_time;
          rev.push_back(walk);
        }
        break;
      }
      if (lab.via_shortcut) {
        journey_leg walk;
        walk.type = journey_leg::kind::walk;
        walk.from = tt.events[lab.parent_alight].stop;
        walk.to = tt.events[lab.board_event].stop;
        walk.walk_time = lab.walk_time;
        walk.start_time = net.arr_of(lab.parent_alight);
        walk.end_time = walk.start_time + lab.walk_time;
        rev.push_back(walk);
      }
      alight = lab.parent_alight;
      --kk;
      li = lab.parent;
    }
    std::reverse(rev.begin(), rev.end());
    j.legs = std::move(rev);
    result.insert(std::move(j));
  }
  return result;
}

}  // namespace transit
