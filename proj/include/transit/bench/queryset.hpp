#pragma once

#include <cstdint>
#include <vector>

#include "transit/delay/scenario.hpp"
#include "transit/query/journey.hpp"
#include "transit/timetable/types.hpp"

namespace transit {

struct query_set {
  enum class kind { random, affected };
  kind k = kind::random;
  std::uint64_t seed = 0;
  time_window window{};
  std::vector<query> queries;

  // affected sets only
  bool partial = false;                     // sampling cap hit before count
  std::uint64_t sampled_total = 0;          // generator draws consumed
  std::uint64_t journeys_sampled_total = 0; // oracle journeys under the scenario
};

// Uniform random (source, target, dep_time in window), deterministic by seed.
query_set gen_queries(const timetable& tt, std::uint64_t seed, std::uint32_t count,
                      time_window window);

struct affected_filter_config {
  std::uint64_t sample_cap = 0;  // 0 picks 64 * count
  int max_rounds = 8;
};

// Consumes the same generator stream as gen_queries and keeps queries whose
// exact Pareto set changes between the zero scenario and sc, until count are
// found or the cap is hit (partial flag).
query_set filter_affected(const timetable& tt, const delay_scenario& sc,
                          std::uint64_t seed, std::uint32_t count, time_window window,
                          const affected_filter_config& cfg = {});

}  // namespace transit
