#pragma once

#include <filesystem>
#include <optional>

#include "transit/shortcuts/event_set.hpp"
#include "transit/shortcuts/project.hpp"

namespace transit {

struct compression_stats {
  std::size_t event_count = 0;  // active event shortcuts
  std::size_t stop_count = 0;
  std::optional<double> count_ratio;  // empty when stop_count == 0
  std::size_t event_bytes = 0;        // 16 B per stop-event vertex + 16 B per shortcut
  std::size_t stop_bytes = 0;         // 8 B per stop edge
  std::optional<double> memory_ratio;
  double projection_seconds = 0.0;
};

compression_stats compute_compression_stats(const event_shortcut_set& es,
                                            const stop_shortcut_set& ss,
                                            double projection_seconds);

// name,value rows; ratios empty when undefined. include_timing controls the
// projection time row so deterministic outputs can omit it.
void write_stats_csv(const compression_stats& st, const std::filesystem::path& file,
                     bool include_timing = true);

}  // namespace transit
