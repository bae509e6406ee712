#include "transit/shortcuts/update.hpp"

#include <algorithm>

#include "transit/core/errors.hpp"
#include "transit/timetable/graph_search.hpp"

namespace transit {

namespace {

update_report basic_impl(event_shortcut_set& es, const delay_scenario& sc,
                         const timetable& tt, std::vector<std::size_t>* invalidated) {
  if (!es.extra.empty()) {
    throw validation_error("update requires a pristine shortcut set");
  }
  update_report rep;
  for (std::size_t i = 0; i < es.records.size(); ++i) {
    if (!es.active[i]) {
      continue;
    }
    const auto& r = es.records[i];
    const auto& ea = tt.events[r.from_event];
    const auto& eb = tt.events[r.to_event];
    const auto arr_a = ea.arr + sc.arr_delay(ea);
    const auto dep_b = eb.dep + sc.dep_delay(eb);
    if (arr_a + r.travel_time + tt.buffer(eb.stop) > dep_b) {
      es.active[i] = 0;
      ++rep.removed_infeasible;
    } else {
      const auto realized = sc.arr_delay(ea);
      if (realized < r.delay_min || realized > r.delay_max) {
        es.active[i] = 0;
        ++rep.removed_interval;
      } else {
        continue;
      }
    }
    if (invalidated != nullptr) {
      invalidated->push_back(i);
    }
  }
  return rep;
}

}  // namespace

update_report update_basic(event_shortcut_set& es, const delay_scenario& sc,
                           const timetable& tt) {
  return basic_impl(es, sc, tt, nullptr);
}

update_report update_with_replacement(event_shortcut_set& es, const delay_scenario& sc,
                                      const timetable& tt) {
  std::vector<std::size_t> invalidated;
  auto rep = basic_impl(es, sc, tt, &invalidated);

  // records are sorted by from_event, so invalidated indexes group by origin
  std::size_t i = 0;
  std::vector<stop_idx> lost;
  while (i < invalidated.size()) {
    const auto origin = es.records[invalidated[i]].from_event;
    lost.clear();
    for (; i < invalidated.size() && es.records[invalidated[i]].from_event == origin; ++i) {
      lost.push_back(tt.events[es.records[invalidated[i]].to_event].stop);
    }
    std::sort(lost.begin(), lost.end());
    lost.erase(std::unique(lost.begin(), lost.end()), lost.end());

    ++rep.origins_searched;
    const auto& ea = tt.events[origin];
    const auto reach = ea.arr + sc.arr_delay(ea);
    const auto dists = dijkstra_from(tt.graph, ea.stop);

    for (auto t : lost) {
      const auto d = dists[t];
      if (d >= k_never) {
        continue;
      }
      event_idx best = k_none;
      time_sec best_dep = k_never;
      for (auto cand : tt.events_at_stop[t]) {
        const auto& eb = tt.events[cand];
        if (eb.trip == ea.trip) {
          continue;
        }
        const auto dep_b = eb.dep + sc.dep_delay(eb);
        if (dep_b >= reach + d + tt.buffer(t) && dep_b < best_dep) {
          best_dep = dep_b;
          best = cand;
        }
      }
      if (best == k_none) {
        continue;
      }
      bool duplicate = false;
      for (auto k = es.first[origin]; k < es.first[origin + 1]; ++k) {
        if (es.active[k] && es.records[k].to_event == best) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) {
        continue;
      }
      const auto realized = std::min(sc.arr_delay(ea), es.delta_max);
      es.extra.push_back({origin, best, d, realized, es.delta_max});
      ++rep.added_replacements;
    }
  }
  return rep;
}

}  // namespace transit
