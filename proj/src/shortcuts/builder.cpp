#include "transit/shortcuts/builder.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "transit/core/errors.hpp"
#include "transit/core/rng.hpp"
#include "transit/timetable/graph_search.hpp"

namespace transit {

namespace {

// All builder scenarios delay whole trips uniformly, so a vector of one
// magnitude per trip describes a scenario completely.
using trip_delays = std::vector<time_sec>;

struct marked_pair {
  time_sec min_origin_delay = k_never;
};

class enumerator {
 public:
  enumerator(const timetable& tt, time_sec delta_max, const builder_config& cfg)
      : tt_(tt),
        delta_(delta_max),
        cfg_(cfg),
        dist_(stop_distance_matrix(tt.graph)),
        num_stops_(static_cast<stop_idx>(tt.stops.size())),
        num_events_(static_cast<event_idx>(tt.events.size())) {}

  void sweep(const trip_delays& delays) {
    if (!delays.empty() && seen_scenarios_.count(delays)) {
      return;
    }
    seen_scenarios_.insert(delays);

    ev_arr_.resize(num_events_);
    ev_dep_.resize(num_events_);
    for (event_idx e = 0; e < num_events_; ++e) {
      const auto d = delays[tt_.events[e].trip];
      ev_arr_[e] = tt_.events[e].arr + d;
      ev_dep_[e] = tt_.events[e].dep + d;
    }

    // one query per distinct (stop, delayed departure) over all events
    std::vector<std::pair<stop_idx, time_sec>> origins;
    origins.reserve(num_events_);
    for (event_idx e = 0; e < num_events_; ++e) {
      origins.emplace_back(tt_.events[e].stop, ev_dep_[e]);
    }
    std::sort(origins.begin(), origins.end());
    origins.erase(std::unique(origins.begin(), origins.end()), origins.end());

    for (auto [o, t0] : origins) {
      run_query(o, t0, delays);
    }
  }

  event_shortcut_set finish() const {
    event_shortcut_set es;
    es.delta_max = delta_;
    es.num_events = num_events_;
    es.records.reserve(marked_.size());
    for (const auto& [key, m] : marked_) {
      const auto a = static_cast<event_idx>(key >> 32);
      const auto b = static_cast<event_idx>(key & 0xffffffffu);
      const auto& ea = tt_.events[a];
      const auto& eb = tt_.events[b];
      const auto w = dist_[ea.stop][eb.stop];
      const auto slack = eb.dep - ea.arr - w - tt_.buffer(eb.stop);
      const auto dmax = std::min(delta_, slack);
      if (dmax < 0 || m.min_origin_delay > dmax) {
        continue;  // only catchable through target-side delays
      }
      es.records.push_back({a, b, w, m.min_origin_delay, dmax});
    }
    es.rebuild_index();
    return es;
  }

 private:
  void run_query(stop_idx origin, time_sec t0, const trip_delays& delays) {
    const auto num_trips = tt_.trips.size();

    arr0_.assign(num_stops_, k_never);
    thld_.assign(num_stops_, k_never);
    const auto& row = dist_[origin];
    for (stop_idx s = 0; s < num_stops_; ++s) {
      if (row[s] < k_never) {
        arr0_[s] = t0 + row[s];
        thld_[s] = arr0_[s] + tt_.buffer(s);
      }
    }
    thld_[origin] = t0;  // standing at the origin, no buffer

    // first boarding per trip, then all reachable first-leg alight events
    alights_.clear();
    for (trip_idx t = 0; t < num_trips; ++t) {
      const auto& evs = tt_.trips[t].events;
      for (std::uint32_t i = 0; i < evs.size(); ++i) {
        if (ev_dep_[evs[i]] >= thld_[tt_.events[evs[i]].stop]) {
          for (std::uint32_t j = i + 1; j < evs.size(); ++j) {
            alights_.push_back(evs[j]);
          }
          break;
        }
      }
    }
    if (alights_.empty()) {
      return;
    }

    a1_.assign(num_stops_, k_never);
    for (auto e : alights_) {
      const auto& drow = dist_[tt_.events[e].stop];
      const auto r = ev_arr_[e];
      for (stop_idx s = 0; s < num_stops_; ++s) {
        if (drow[s] < k_never && r + drow[s] < a1_[s]) {
          a1_[s] = r + drow[s];
        }
      }
    }

    // earliest catchable boarding of every second trip from every alight
    boardings_.assign(num_trips, {});
    for (auto ea : alights_) {
      const auto p = tt_.events[ea].stop;
      const auto reach = ev_arr_[ea];
      const auto& prow = dist_[p];
      const auto first_trip = tt_.events[ea].trip;
      for (trip_idx t2 = 0; t2 < num_trips; ++t2) {
        if (t2 == first_trip) {
          continue;
        }
        const auto& evs = tt_.trips[t2].events;
        for (std::uint32_t i = 0; i < evs.size(); ++i) {
          const auto q = tt_.events[evs[i]].stop;
          bool ok, walked;
          if (q == p) {
            ok = ev_dep_[evs[i]] >= reach + tt_.buffer(q);
            walked = false;
          } else {
            ok = prow[q] < k_never && ev_dep_[evs[i]] >= reach + prow[q] + tt_.buffer(q);
            walked = true;
          }
          if (ok) {
            boardings_[t2].push_back({i, walked ? ea : k_none, evs[i]});
            break;
          }
        }
      }
    }

    // per-trip suffix arrival tables at each achieved boarding level
    a2_.assign(num_stops_, k_never);
    level_rows_.assign(num_trips, {});
    levels_.assign(num_trips, {});
    for (trip_idx t2 = 0; t2 < num_trips; ++t2) {
      auto& bds = boardings_[t2];
      if (bds.empty()) {
        continue;
      }
      auto& lv = levels_[t2];
      for (const auto& b : bds) {
        lv.push_back(b.level);
      }
      std::sort(lv.begin(), lv.end());
      lv.erase(std::unique(lv.begin(), lv.end()), lv.end());

      const auto& evs = tt_.trips[t2].events;
      auto& rows = level_rows_[t2];
      rows.assign(lv.size(), {});
      row_.assign(num_stops_, k_never);
      auto next = static_cast<std::uint32_t>(evs.size());  // first event not yet folded in
      for (std::size_t k = lv.size(); k-- > 0;) {
        while (next > lv[k] + 1) {
          --next;
          const auto e = evs[next];
          const auto& drow = dist_[tt_.events[e].stop];
          const auto r = ev_arr_[e];
          for (stop_idx s = 0; s < num_stops_; ++s) {
            if (drow[s] < k_never && r + drow[s] < row_[s]) {
              row_[s] = r + drow[s];
            }
          }
        }
        rows[k] = row_;
      }
      for (stop_idx s = 0; s < num_stops_; ++s) {
        if (rows[0][s] < a2_[s]) {
          a2_[s] = rows[0][s];
        }
      }
    }

    // mark walk transfers feeding a strictly Pareto-optimal two-trip arrival
    for (trip_idx t2 = 0; t2 < num_trips; ++t2) {
      const auto& lv = levels_[t2];
      if (lv.empty()) {
        continue;
      }
      const auto& rows = level_rows_[t2];
      std::int64_t max_level = -1;
      for (stop_idx s = 0; s < num_stops_; ++s) {
        if (a2_[s] >= k_never || a2_[s] >= a1_[s] || a2_[s] >= arr0_[s]) {
          continue;  // two-trip arrival not strictly optimal at s
        }
        if (rows[0][s] != a2_[s]) {
          continue;
        }
        std::size_t k = 0;
        while (k + 1 < lv.size() && rows[k + 1][s] == a2_[s]) {
          ++k;
        }
        max_level = std::max<std::int64_t>(max_level, lv[k]);
      }
      if (max_level < 0) {
        continue;
      }
      for (const auto& b : boardings_[t2]) {
        if (b.from_event != k_none && b.level <= max_level) {
          mark(b.from_event, b.board_event, delays);
        }
      }
    }
  }

  void mark(event_idx from, event_idx to, const trip_delays& delays) {
    const auto key = (static_cast<std::uint64_t>(from) << 32) | to;
    const auto realized = delays[tt_.events[from].trip];
    auto [it, inserted] = marked_.try_emplace(key);
    if (inserted && marked_.size() > cfg_.max_pairs) {
      throw budget_error("event shortcut enumeration exceeded " +
                         std::to_string(cfg_.max_pairs) + " pairs");
    }
    if (realized < it->second.min_origin_delay) {
      it->second.min_origin_delay = realized;
    }
  }

  struct boarding {
    std::uint32_t level;     // boarding index within the second trip
    event_idx from_event;    // k_none for same-stop changes
    event_idx board_event;
  };

  const timetable& tt_;
  time_sec delta_;
  builder_config cfg_;
  std::vector<std::vector<time_sec>> dist_;
  stop_idx num_stops_;
  event_idx num_events_;

  std::set<trip_delays> seen_scenarios_;
  std::unordered_map<std::uint64_t, marked_pair> marked_;

  // scenario scratch
  std::vector<time_sec> ev_arr_, ev_dep_;
  // query scratch
  std::vector<time_sec> arr0_, thld_, a1_, a2_, row_;
  std::vector<event_idx> alights_;
  std::vector<std::vector<boarding>> boardings_;
  std::vector<std::vector<std::uint32_t>> levels_;
  std::vector<std::vector<std::vector<time_sec>>> level_rows_;
};

}  // namespace

event_shortcut_set build_event_shortcuts(const timetable& tt, time_sec delta_max,
                                         const builder_config& cfg) {
  if (delta_max < 0) {
    throw validation_error("delta_max must be nonnegative");
  }
  enumerator en(tt, delta_max, cfg);
  const auto num_trips = tt.trips.size();

  en.sweep(trip_delays(num_trips, 0));
  if (delta_max > 0 && num_trips > 0) {
    en.sweep(trip_delays(num_trips, delta_max));

    auto grid = cfg.trip_delay_grid;
    if (grid.empty()) {
      grid.push_back(delta_max);
    }
    for (auto d : grid) {
      if (d <= 0 || d > delta_max) {
        continue;
      }
      for (trip_idx t = 0; t < num_trips; ++t) {
        trip_delays delays(num_trips, 0);
        delays[t] = d;
        en.sweep(delays);
      }
    }

    rng64 rng(cfg.seed);
    for (std::uint32_t i = 0; i < cfg.sample_count; ++i) {
      trip_delays delays(num_trips);
      for (auto& d : delays) {
        d = static_cast<time_sec>(rng.below(static_cast<std::uint64_t>(delta_max) + 1));
      }
      en.sweep(delays);
    }
  }
  return en.finish();
}

}  // namespace transit
