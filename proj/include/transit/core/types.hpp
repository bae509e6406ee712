#pragma once

#include <cstdint>
#include <limits>

namespace transit {

// All times are integer seconds since the start of the service day.
// The range [0, 172800] covers two days so that trips may run past midnight.
using time_sec = std::int32_t;

using stop_idx   = std::uint32_t;
using route_idx  = std::uint32_t;
using trip_idx   = std::uint32_t;
using event_idx  = std::uint32_t;
using vertex_idx = std::uint32_t;  // transfer-graph vertex; stops occupy [0, num_stops)

constexpr time_sec k_never  = 0x3f3f3f3f;  // unreachable; safe to add without overflow
constexpr time_sec k_day_max = 172800;
constexpr std::uint32_t k_none = std::numeric_limits<std::uint32_t>::max();

struct time_window {
  time_sec start = 0;
  time_sec end = 0;  // half-open [start, end)

  bool contains(time_sec t) const { return t >= start && t < end; }
  bool valid() const { return start <= end; }
};

}  // namespace transit
