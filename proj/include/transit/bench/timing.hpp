#pragma once

#include <string>
#include <vector>

#include "transit/bench/accuracy.hpp"

namespace transit {

struct timing_row {
  std::string engine;
  double mean_ms = 0.0;
  double median_of_means_ms = 0.0;
  double speedup_vs_oracle = 0.0;
  std::size_t queries = 0;
  int repetitions = 0;
};

// Wall-clock query timing, single-threaded, one untimed warm-up pass per
// engine. Speedups are relative to the row named "oracle" when present.
std::vector<timing_row> run_benchmark(const std::vector<engine_runner>& engines,
                                      const std::vector<query>& queries, int repetitions);

}  // namespace transit
