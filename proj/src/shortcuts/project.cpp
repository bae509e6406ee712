#include "transit/shortcuts/project.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include "transit/core/errors.hpp"

namespace transit {

stop_shortcut_set project(const event_shortcut_set& es, const timetable& tt) {
  std::unordered_map<std::uint64_t, time_sec> best;
  best.reserve(es.active_count());
  es.for_each([&](const event_shortcut& r, bool is_active) {
    if (!is_active) {
      return;
    }
    const auto s = tt.events[r.from_event].stop;
    const auto t = tt.events[r.to_event].stop;
    const auto key = (static_cast<std::uint64_t>(s) << 32) | t;
    auto [it, inserted] = best.try_emplace(key, r.travel_time);
    if (!inserted && r.travel_time < it->second) {
      it->second = r.travel_time;
    }
  });

  stop_shortcut_set ss;
  ss.edges.reserve(best.size());
  for (const auto& [key, w] : best) {
    ss.edges.push_back({static_cast<stop_idx>(key >> 32),
                        static_cast<stop_idx>(key & 0xffffffffu), w});
  }
  std::sort(ss.edges.begin(), ss.edges.end(),
            [](const stop_shortcut& a, const stop_shortcut& b) {
              if (a.from != b.from) return a.from < b.from;
              return a.to < b.to;
            });
  return ss;
}

transfer_graph merge_into_transfer_graph(const stop_shortcut_set& ss, const transfer_graph& g) {
  transfer_graph merged = g;
  for (const auto& e : ss.edges) {
    if (e.from >= merged.num_stops || e.to >= merged.num_stops) {
      throw validation_error("stop shortcut (" + std::to_string(e.from) + "," +
                             std::to_string(e.to) + ") references an unknown stop");
    }
    transfer_edge* existing = nullptr;
    for (auto& out : merged.out[e.from]) {
      if (out.to == e.to && (existing == nullptr || out.travel_time < existing->travel_time)) {
        existing = &out;
      }
    }
    if (existing == nullptr) {
      merged.add_edge(e.from, e.to, e.travel_time);
    } else if (e.travel_time < existing->travel_time) {
      existing->travel_time = e.travel_time;
      for (auto& in : merged.in[e.to]) {
        if (in.to == e.from && in.travel_time > e.travel_time) {
          in.travel_time = e.travel_time;
          break;
        }
      }
    }
  }
  merged.sort_by_travel_time();
  return merged;
}

namespace {
constexpr std::uint32_t k_magic = 0x54535353;  // "TSSS"
}

void write_stop_shortcuts(const stop_shortcut_set& ss, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) {
    throw io_error("cannot write " + file.string());
  }
  const std::uint64_t n = ss.edges.size();
  out.write(reinterpret_cast<const char*>(&k_magic), 4);
  out.write(reinterpret_cast<const char*>(&n), 8);
  for (const auto& e : ss.edges) {
    out.write(reinterpret_cast<const char*>(&e.from), 4);
    out.write(reinterpret_cast<const char*>(&e.to), 4);
    out.write(reinterpret_cast<const char*>(&e.travel_time), 4);
  }
  if (!out) {
    throw io_error("write failed for " + file.string());
  }
}

stop_shortcut_set read_stop_shortcuts(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw io_error("cannot open " + file.string());
  }
  std::uint32_t magic = 0;
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&magic), 4);
  in.read(reinterpret_cast<char*>(&n), 8);
  if (!in || magic != k_magic) {
    throw parse_error(file.string(), 0, "not a stop shortcut file");
  }
  stop_shortcut_set ss;
  ss.edges.resize(n);
  for (auto& e : ss.edges) {
    in.read(reinterpret_cast<char*>(&e.from), 4);
    in.read(reinterpret_cast<char*>(&e.to), 4);
    in.read(reinterpret_cast<char*>(&e.travel_time), 4);
  }
  if (!in) {
    throw io_error("truncated stop shortcut file " + file.string());
  }
  return ss;
}

}  // namespace transit
