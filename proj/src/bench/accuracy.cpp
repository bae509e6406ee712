#include "transit/bench/accuracy.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <thread>

namespace transit {

double percent(std::size_t numerator, std::size_t denominator) {
  if (denominator == 0) {
    return 0.0;
  }
  return 100.0 * static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::string format_percent(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", pct);
  return buf;
}

double accuracy_report::pct_fq_affected() const { return percent(failed_queries, affected_total); }
double accuracy_report::pct_fq_all() const { return percent(failed_queries, all_total); }

std::optional<double> accuracy_report::pct_fj_affected() const {
  if (!failed_journeys) {
    return std::nullopt;
  }
  return percent(*failed_journeys, journeys_affected_total);
}

std::optional<double> accuracy_report::pct_fj_all() const {
  if (!failed_journeys) {
    return std::nullopt;
  }
  return percent(*failed_journeys, journeys_all_total);
}

unsigned harness_threads(unsigned requested) {
  if (requested > 0) {
    return requested;
  }
  if (const char* env = std::getenv("TS_THREADS")) {
    const auto n = std::atoi(env);
    if (n > 0) {
      return static_cast<unsigned>(n);
    }
  }
  return 1;
}

accuracy_report evaluate_accuracy(const engine_runner& engine,
                                  const std::vector<pareto_set>& oracle_results,
                                  const query_set& affected, std::size_t all_total,
                                  std::size_t journeys_all_total, unsigned threads) {
  accuracy_report rep;
  rep.engine = engine.name;
  rep.affected_total = affected.queries.size();
  rep.all_total = all_total;
  rep.journeys_all_total = journeys_all_total;
  for (const auto& o : oracle_results) {
    rep.journeys_affected_total += o.entries.size();
  }

  const auto n = affected.queries.size();
  const auto workers = std::min<std::size_t>(harness_threads(threads), std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::size_t> fq(workers, 0), fj(workers, 0);

  auto work = [&](std::size_t w) {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      const auto& oracle = oracle_results[i];
      const auto got = engine.run(affected.queries[i]);
      if (engine.single_criterion) {
        const auto want = extract_earliest_arrival(oracle);
        const auto have = extract_earliest_arrival(got);
        if (want && (!have || *have > *want)) {
          ++fq[w];
        }
      } else {
        std::size_t missed = 0;
        for (const auto& e : oracle.entries) {
          if (!got.covers(e.arrival, e.num_trips)) {
            ++missed;
          }
        }
        if (missed > 0) {
          ++fq[w];
          fj[w] += missed;
        }
      }
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(work, w);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  for (std::size_t w = 0; w < workers; ++w) {
    rep.failed_queries += fq[w];
  }
  if (!engine.single_criterion) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < workers; ++w) {
      total += fj[w];
    }
    rep.failed_journeys = total;
  }
  return rep;
}

}  // namespace transit
