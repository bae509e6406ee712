#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "transit/bench/queryset.hpp"
#include "transit/query/engines.hpp"

namespace transit {

struct engine_runner {
  std::string name;
  bool single_criterion = false;
  std::function<pareto_set(const query&)> run;
};

struct accuracy_report {
  std::string engine;
  std::size_t failed_queries = 0;               // F.Q
  std::optional<std::size_t> failed_journeys;   // F.J, empty for single-criterion
  std::size_t affected_total = 0;
  std::size_t all_total = 0;
  std::size_t journeys_affected_total = 0;
  std::size_t journeys_all_total = 0;

  double pct_fq_affected() const;
  double pct_fq_all() const;
  std::optional<double> pct_fj_affected() const;
  std::optional<double> pct_fj_all() const;
};

// Percentage with two decimals, the formatting used in all reports.
double percent(std::size_t numerator, std::size_t denominator);
std::string format_percent(double pct);

// Scores the engine against precomputed oracle Pareto sets. A multicriteria
// engine misses an oracle journey (a, k) when it returns nothing with
// arrival <= a and trips <= k; single-criterion engines are scored on the
// earliest arrival only. threads = 0 reads TS_THREADS (default 1).
accuracy_report evaluate_accuracy(const engine_runner& engine,
                                  const std::vector<pareto_set>& oracle_results,
                                  const query_set& affected, std::size_t all_total,
                                  std::size_t journeys_all_total, unsigned threads = 0);

unsigned harness_threads(unsigned requested);

}  // namespace transit
