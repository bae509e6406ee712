#include "transit/delay/generate.hpp"

#include <algorithm>

#include "transit/core/rng.hpp"

namespace transit {

namespace {

time_sec draw_magnitude(rng64& rng, const incident_distribution& dist) {
  if (rng.unit() < dist.zero_probability) {
    return 0;
  }
  // geometric over buckets via Bernoulli chain, truncated at the cap
  const double p = static_cast<double>(dist.bucket) / static_cast<double>(dist.mean_nonzero);
  time_sec d = dist.bucket;
  while (d < dist.cap && rng.unit() >= p) {
    d += dist.bucket;
  }
  return std::min(d, dist.cap);
}

}  // namespace

delay_scenario generate_incident_scenario(const timetable& tt, std::uint64_t seed,
                                          time_sec delta_max, time_window window,
                                          const incident_distribution& dist) {
  delay_scenario sc;
  sc.seed = seed;
  sc.delta_max = delta_max;
  sc.window = window;

  rng64 rng(seed);
  std::vector<std::uint32_t> eligible;
  for (trip_idx t = 0; t < tt.trips.size(); ++t) {
    eligible.clear();
    for (std::uint32_t i = 0; i < tt.trips[t].events.size(); ++i) {
      const auto& ev = tt.events[tt.trips[t].events[i]];
      if (window.contains(ev.arr) || window.contains(ev.dep)) {
        eligible.push_back(i);
      }
    }
    if (eligible.empty()) {
      continue;
    }
    const auto start = eligible[rng.below(eligible.size())];
    const auto d = std::min(draw_magnitude(rng, dist), delta_max);
    if (d > 0) {
      sc.incidents.push_back({t, start, d});
    }
  }
  return sc;
}

}  // namespace transit
