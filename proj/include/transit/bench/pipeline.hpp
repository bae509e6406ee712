#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "transit/core/types.hpp"

namespace transit {

// Full configuration of one benchmark run; everything lands in the manifest
// so any run can be reproduced from it.
struct run_config {
  std::string dataset;
  time_sec delta = 300;                  // shortcut delay buffer
  time_sec incident_bound = 600;         // scenario delay cap
  std::uint64_t scenario_seed = 42;
  std::uint64_t query_seed = 7;
  std::uint64_t builder_seed = 1;
  std::uint32_t builder_samples = 8;
  time_window query_window{46800, 50400};  // 13:00-14:00
  time_window delay_window{43200, 46800};  // 12:00-13:00
  std::vector<std::string> engines{"csa", "raptor", "raptor-ep", "tb", "oracle"};
  bool replacement = true;
  std::string activation = "use";  // tb shortcut activation: use | ignore
  std::uint32_t query_count = 500;
  std::uint32_t affected_count = 100;
  int repetitions = 3;
  int max_rounds = 8;
  std::string out_dir = "bench-out";
};

struct pipeline_result {
  std::filesystem::path manifest;
  std::filesystem::path accuracy_csv;
  std::filesystem::path stats_csv;
  std::filesystem::path timing_csv;
  std::filesystem::path report_csv;
  std::filesystem::path report_md;
};

// gen -> build -> update -> project -> filter affected -> evaluate ->
// benchmark -> emit. Accuracy and stats outputs depend only on the config
// and dataset, never on wall-clock time.
pipeline_result run_bench_pipeline(const run_config& cfg);

void save_manifest(const run_config& cfg, const std::string& dataset_hash,
                   const std::filesystem::path& file);
run_config load_manifest(const std::filesystem::path& file);

std::string dataset_hash(const std::filesystem::path& dataset_dir);

}  // namespace transit
