#include "transit/query/journey.hpp"

#include <algorithm>
#include <cstdio>

namespace transit {

void pareto_set::insert(journey j) {
  if (j.arrival >= k_never) {
    return;
  }
  for (const auto& e : entries) {
    if (e.arrival <= j.arrival && e.num_trips <= j.num_trips) {
      return;  // dominated
    }
  }
  std::erase_if(entries, [&](const journey& e) {
    return j.arrival <= e.arrival && j.num_trips <= e.num_trips;
  });
  auto pos = std::lower_bound(entries.begin(), entries.end(), j,
                              [](const journey& a, const journey& b) {
                                return a.num_trips < b.num_trips;
                              });
  entries.insert(pos, std::move(j));
}

bool pareto_set::same_points(const pareto_set& other) const {
  if (entries.size() != other.entries.size()) {
    return false;
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].arrival != other.entries[i].arrival ||
        entries[i].num_trips != other.entries[i].num_trips) {
      return false;
    }
  }
  return true;
}

bool pareto_set::covers(time_sec arr, int trips) const {
  for (const auto& e : entries) {
    if (e.arrival <= arr && e.num_trips <= trips) {
      return true;
    }
  }
  return false;
}

std::optional<time_sec> extract_earliest_arrival(const pareto_set& ps) {
  std::optional<time_sec> best;
  for (const auto& e : ps.entries) {
    if (!best || e.arrival < *best) {
      best = e.arrival;
    }
  }
  return best;
}

std::string format_time(time_sec t) {
  if (t >= k_never) {
    return "--:--:--";
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d:%02d:%02d", t / 3600, (t / 60) % 60, t % 60);
  return buf;
}

}  // namespace transit
