#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "transit/bench/accuracy.hpp"
#include "transit/bench/timing.hpp"

namespace transit {

// One line of the combined report: engine, ms/q, speedup, F.Q, F.J,
// % of affected, % of all. Unset fields serialize as empty cells.
struct report_row {
  std::string engine;
  std::optional<double> ms_per_query;
  std::optional<double> speedup;
  std::optional<std::size_t> failed_queries;
  std::optional<std::size_t> failed_journeys;
  std::optional<double> pct_affected;
  std::optional<double> pct_all;
};

std::vector<report_row> combine_reports(const std::vector<accuracy_report>& accuracy,
                                        const std::vector<timing_row>& timing);

void write_report_csv(const std::vector<report_row>& rows, const std::filesystem::path& file);
std::vector<report_row> read_report_csv(const std::filesystem::path& file);
void write_report_md(const std::vector<report_row>& rows, const std::filesystem::path& file);

// Deterministic per-engine accuracy table (no timing fields).
void write_accuracy_csv(const std::vector<accuracy_report>& reports,
                        const std::filesystem::path& file);

void write_timing_csv(const std::vector<timing_row>& rows, const std::filesystem::path& file,
                      double update_seconds, double prepare_seconds);

}  // namespace transit
