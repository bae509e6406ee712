#include "transit/bench/queryset.hpp"

#include "transit/core/errors.hpp"
#include "transit/core/rng.hpp"
#include "transit/query/engines.hpp"

namespace transit {

namespace {

query draw_query(rng64& rng, const timetable& tt, time_window window) {
  query q;
  q.source = static_cast<stop_idx>(rng.below(tt.stops.size()));
  q.target = static_cast<stop_idx>(rng.below(tt.stops.size()));
  q.dep_time = window.start +
               static_cast<time_sec>(rng.below(
                   static_cast<std::uint64_t>(window.end - window.start)));
  return q;
}

}  // namespace

query_set gen_queries(const timetable& tt, std::uint64_t seed, std::uint32_t count,
                      time_window window) {
  if (!window.valid() || window.end <= window.start) {
    throw validation_error("query window must be a nonempty interval");
  }
  if (tt.stops.empty()) {
    throw validation_error("cannot sample queries from an empty timetable");
  }
  query_set qs;
  qs.k = query_set::kind::random;
  qs.seed = seed;
  qs.window = window;
  rng64 rng(seed);
  qs.queries.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    qs.queries.push_back(draw_query(rng, tt, window));
  }
  return qs;
}

query_set filter_affected(const timetable& tt, const delay_scenario& sc,
                          std::uint64_t seed, std::uint32_t count, time_window window,
                          const affected_filter_config& cfg) {
  query_set qs;
  qs.k = query_set::kind::affected;
  qs.seed = seed;
  qs.window = window;

  const auto zero = prepare(tt, delay_scenario{});
  const auto delayed = prepare(tt, sc);
  engine_config oracle_cfg;
  oracle_cfg.max_rounds = cfg.max_rounds;

  const auto cap = cfg.sample_cap != 0 ? cfg.sample_cap : std::uint64_t{64} * count;
  rng64 rng(seed);
  while (qs.queries.size() < count && qs.sampled_total < cap) {
    const auto q = draw_query(rng, tt, window);
    ++qs.sampled_total;
    const auto before = oracle_query(zero, q, oracle_cfg);
    const auto after = oracle_query(delayed, q, oracle_cfg);
    qs.journeys_sampled_total += after.entries.size();
    if (!before.same_points(after)) {
      qs.queries.push_back(q);
    }
  }
  qs.partial = qs.queries.size() < count;
  return qs;
}

}  // namespace transit
