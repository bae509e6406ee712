#include "transit/shortcuts/event_set.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "transit/core/errors.hpp"

namespace transit {

std::size_t event_shortcut_set::active_count() const {
  std::size_t n = extra.size();
  for (auto f : active) {
    n += f;
  }
  return n;
}

void event_shortcut_set::rebuild_index() {
  std::sort(records.begin(), records.end(),
            [](const event_shortcut& a, const event_shortcut& b) {
              if (a.from_event != b.from_event) return a.from_event < b.from_event;
              return a.to_event < b.to_event;
            });
  first.assign(num_events + 1, 0);
  for (const auto& r : records) {
    ++first[r.from_event + 1];
  }
  for (std::size_t i = 1; i < first.size(); ++i) {
    first[i] += first[i - 1];
  }
  active.assign(records.size(), 1);
  extra.clear();
}

namespace {

constexpr std::uint32_t k_magic = 0x54534553;  // "TSES"
constexpr std::uint32_t k_version = 1;

template <typename T>
void put(std::ofstream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
T get(std::ifstream& in, const std::filesystem::path& file) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof value);
  if (!in) {
    throw io_error("truncated shortcut file " + file.string());
  }
  return value;
}

}  // namespace

void write_event_shortcuts(const event_shortcut_set& es, const std::filesystem::path& file) {
  // canonical active snapshot, sorted by (from, to)
  std::vector<event_shortcut> recs;
  recs.reserve(es.active_count());
  es.for_each([&](const event_shortcut& r, bool is_active) {
    if (is_active) {
      recs.push_back(r);
    }
  });
  std::sort(recs.begin(), recs.end(), [](const event_shortcut& a, const event_shortcut& b) {
    if (a.from_event != b.from_event) return a.from_event < b.from_event;
    if (a.to_event != b.to_event) return a.to_event < b.to_event;
    return a.travel_time < b.travel_time;
  });

  std::ofstream out(file, std::ios::binary);
  if (!out) {
    throw io_error("cannot write " + file.string());
  }
  put(out, k_magic);
  put(out, k_version);
  put(out, static_cast<std::int32_t>(es.delta_max));
  put(out, es.num_events);
  put(out, static_cast<std::uint64_t>(recs.size()));

  // 16 bytes per stop-event vertex: first-record offset plus padding
  std::uint64_t offset = 0;
  std::size_t i = 0;
  for (std::uint32_t v = 0; v < es.num_events; ++v) {
    while (i < recs.size() && recs[i].from_event < v) {
      ++i;
    }
    offset = i;
    put(out, offset);
    put(out, std::uint64_t{0});
  }
  // 16 bytes per record: destination, travel time, min delay, max delay
  for (const auto& r : recs) {
    put(out, r.to_event);
    put(out, static_cast<std::int32_t>(r.travel_time));
    put(out, static_cast<std::int32_t>(r.delay_min));
    put(out, static_cast<std::int32_t>(r.delay_max));
  }
  if (!out) {
    throw io_error("write failed for " + file.string());
  }
}

event_shortcut_set read_event_shortcuts(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw io_error("cannot open " + file.string());
  }
  if (get<std::uint32_t>(in, file) != k_magic) {
    throw parse_error(file.string(), 0, "not an event shortcut file");
  }
  if (get<std::uint32_t>(in, file) != k_version) {
    throw parse_error(file.string(), 0, "unsupported version");
  }
  event_shortcut_set es;
  es.delta_max = get<std::int32_t>(in, file);
  es.num_events = get<std::uint32_t>(in, file);
  const auto count = get<std::uint64_t>(in, file);

  std::vector<std::uint64_t> offsets(es.num_events);
  for (std::uint32_t v = 0; v < es.num_events; ++v) {
    offsets[v] = get<std::uint64_t>(in, file);
    (void)get<std::uint64_t>(in, file);
  }
  es.records.resize(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto& r = es.records[i];
    r.to_event = get<std::uint32_t>(in, file);
    r.travel_time = get<std::int32_t>(in, file);
    r.delay_min = get<std::int32_t>(in, file);
    r.delay_max = get<std::int32_t>(in, file);
  }
  // recover origins from the offset table
  for (std::uint32_t v = 0; v < es.num_events; ++v) {
    const auto begin = offsets[v];
    const auto end = v + 1 < es.num_events ? offsets[v + 1] : count;
    for (auto i = begin; i < end; ++i) {
      es.records[i].from_event = v;
    }
  }
  es.rebuild_index();
  return es;
}

}  // namespace transit
