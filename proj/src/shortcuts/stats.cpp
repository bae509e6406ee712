#include "transit/shortcuts/stats.hpp"

#include <cstdio>
#include <fstream>

#include "transit/core/errors.hpp"

namespace transit {

compression_stats compute_compression_stats(const event_shortcut_set& es,
                                            const stop_shortcut_set& ss,
                                            double projection_seconds) {
  compression_stats st;
  st.event_count = es.active_count();
  st.stop_count = ss.edges.size();
  st.event_bytes = 16 * static_cast<std::size_t>(es.num_events) + 16 * st.event_count;
  st.stop_bytes = 8 * st.stop_count;
  if (st.stop_count > 0) {
    st.count_ratio = static_cast<double>(st.event_count) / static_cast<double>(st.stop_count);
    st.memory_ratio = static_cast<double>(st.event_bytes) / static_cast<double>(st.stop_bytes);
  }
  st.projection_seconds = projection_seconds;
  return st;
}

void write_stats_csv(const compression_stats& st, const std::filesystem::path& file,
                     bool include_timing) {
  std::ofstream out(file);
  if (!out) {
    throw io_error("cannot write " + file.string());
  }
  auto ratio = [](const std::optional<double>& r) {
    if (!r) {
      return std::string{};
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *r);
    return std::string(buf);
  };
  out << "name,value\n";
  out << "Event-level shortcuts," << st.event_count << '\n';
  out << "Stop-level shortcuts," << st.stop_count << '\n';
  out << "Count ratio," << ratio(st.count_ratio) << '\n';
  out << "Event-level bytes," << st.event_bytes << '\n';
  out << "Stop-level bytes," << st.stop_bytes << '\n';
  out << "Memory ratio," << ratio(st.memory_ratio) << '\n';
  if (include_timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", st.projection_seconds);
    out << "Projection computation time (s)," << buf << '\n';
  }
}

}  // namespace transit
