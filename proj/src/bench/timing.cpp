#include "transit/bench/timing.hpp"

#include <algorithm>
#include <chrono>

namespace transit {

std::vector<timing_row> run_benchmark(const std::vector<engine_runner>& engines,
                                      const std::vector<query>& queries, int repetitions) {
  using clock = std::chrono::steady_clock;
  std::vector<timing_row> rows;
  volatile std::int64_t sink = 0;

  for (const auto& engine : engines) {
    // warm-up
    for (const auto& q : queries) {
      const auto r = engine.run(q);
      sink += static_cast<std::int64_t>(r.entries.size());
    }
    std::vector<double> rep_means;
    rep_means.reserve(static_cast<std::size_t>(repetitions));
    for (int rep = 0; rep < repetitions; ++rep) {
      const auto begin = clock::now();
      for (const auto& q : queries) {
        const auto r = engine.run(q);
        sink += static_cast<std::int64_t>(r.entries.size());
      }
      const auto end = clock::now();
      const auto ms = std::chrono::duration<double, std::milli>(end - begin).count();
      rep_means.push_back(queries.empty() ? 0.0 : ms / static_cast<double>(queries.size()));
    }
    timing_row row;
    row.engine = engine.name;
    row.queries = queries.size();
    row.repetitions = repetitions;
    double total = 0.0;
    for (auto m : rep_means) {
      total += m;
    }
    row.mean_ms = rep_means.empty() ? 0.0 : total / static_cast<double>(rep_means.size());
    auto sorted = rep_means;
    std::sort(sorted.begin(), sorted.end());
    row.median_of_means_ms = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];
    rows.push_back(std::move(row));
  }

  double oracle_mean = 0.0;
  for (const auto& r : rows) {
    if (r.engine == "oracle") {
      oracle_mean = r.mean_ms;
      break;
    }
  }
  for (auto& r : rows) {
    r.speedup_vs_oracle = oracle_mean > 0.0 && r.mean_ms > 0.0 ? oracle_mean / r.mean_ms : 0.0;
  }
  return rows;
}

}  // namespace transit
