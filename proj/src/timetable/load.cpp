#include "transit/timetable/load.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "transit/core/csv.hpp"
#include "transit/core/errors.hpp"

namespace transit {

namespace {

void load_stops(const std::filesystem::path& dir, timetable& tt) {
  csv_reader csv(dir / "stops.csv", {"id", "name", "buffer_time"});
  std::vector<std::string> f;
  while (csv.next(f)) {
    const auto id = csv.to_u32(f[0], "stop id");
    if (id != tt.stops.size()) {
      csv.fail("stop ids must be dense and in file order; got " + f[0] + ", want " +
               std::to_string(tt.stops.size()));
    }
    const auto buffer = csv.to_i32(f[2], "buffer_time");
    if (buffer < 0) {
      csv.fail("buffer_time must be nonnegative");
    }
    tt.stops.push_back({f[1], buffer});
  }
}

void load_routes(const std::filesystem::path& dir, timetable& tt) {
  csv_reader csv(dir / "routes.csv", {"id", "stop_sequence"});
  std::vector<std::string> f;
  std::vector<std::string> parts;
  while (csv.next(f)) {
    const auto id = csv.to_u32(f[0], "route id");
    if (id != tt.routes.size()) {
      csv.fail("route ids must be dense and in file order");
    }
    route r;
    split_fields(f[1], ';', parts);
    for (const auto& p : parts) {
      const auto s = csv.to_u32(p, "stop id in stop_sequence");
      if (s >= tt.stops.size()) {
        csv.fail("route " + f[0] + " references unknown stop " + p);
      }
      r.stop_sequence.push_back(s);
    }
    if (r.stop_sequence.empty()) {
      csv.fail("route " + f[0] + " has an empty stop_sequence");
    }
    tt.routes.push_back(std::move(r));
  }
}

void load_trips(const std::filesystem::path& dir, timetable& tt) {
  csv_reader csv(dir / "trips.csv", {"trip_id", "route_id"});
  std::vector<std::string> f;
  while (csv.next(f)) {
    const auto id = csv.to_u32(f[0], "trip id");
    if (id != tt.trips.size()) {
      csv.fail("trip ids must be dense and in file order");
    }
    const auto r = csv.to_u32(f[1], "route id");
    if (r >= tt.routes.size()) {
      csv.fail("trip " + f[0] + " references unknown route " + f[1]);
    }
    tt.trips.push_back({r, {}});
    tt.routes[r].trips.push_back(id);
  }
}

void load_stop_times(const std::filesystem::path& dir, timetable& tt) {
  csv_reader csv(dir / "stop_times.csv", {"trip_id", "seq", "stop_id", "arr", "dep"});
  std::vector<std::string> f;
  // collect rows per trip, then order by seq
  std::vector<std::vector<std::pair<std::uint32_t, event_idx>>> rows(tt.trips.size());
  while (csv.next(f)) {
    const auto t = csv.to_u32(f[0], "trip id");
    if (t >= tt.trips.size()) {
      csv.fail("stop_times references unknown trip " + f[0]);
    }
    const auto seq = csv.to_u32(f[1], "seq");
    const auto s = csv.to_u32(f[2], "stop id");
    if (s >= tt.stops.size()) {
      csv.fail("stop_times references unknown stop " + f[2]);
    }
    stop_event ev;
    ev.stop = s;
    ev.arr = csv.to_i32(f[3], "arr");
    ev.dep = csv.to_i32(f[4], "dep");
    ev.trip = t;
    ev.index_in_trip = seq;
    rows[t].emplace_back(seq, static_cast<event_idx>(tt.events.size()));
    tt.events.push_back(ev);
  }
  for (trip_idx t = 0; t < tt.trips.size(); ++t) {
    auto& r = rows[t];
    std::sort(r.begin(), r.end());
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i].first != i) {
        throw validation_error("trip " + std::to_string(t) +
                               " stop_times seq values are not 0..k-1");
      }
      tt.trips[t].events.push_back(r[i].second);
    }
  }
}

void load_transfers(const std::filesystem::path& dir, timetable& tt) {
  csv_reader csv(dir / "transfers.csv", {"from", "to", "travel_time"});
  std::vector<std::string> f;
  tt.graph.num_stops = static_cast<stop_idx>(tt.stops.size());
  if (!tt.stops.empty()) {
    tt.graph.ensure_vertex(static_cast<vertex_idx>(tt.stops.size() - 1));
  }
  while (csv.next(f)) {
    const auto from = csv.to_u32(f[0], "from vertex");
    const auto to = csv.to_u32(f[1], "to vertex");
    const auto w = csv.to_i32(f[2], "travel_time");
    if (w < 1) {
      csv.fail("transfer travel_time must be >= 1");
    }
    if (from == to) {
      csv.fail("transfer self-loops are not allowed");
    }
    // vertices beyond the stop range are auxiliary
    tt.graph.add_edge(from, to, w);
  }
}

}  // namespace

timetable load_timetable(const std::filesystem::path& dataset_dir) {
  if (!std::filesystem::is_directory(dataset_dir)) {
    throw io_error("dataset directory not found: " + dataset_dir.string());
  }
  timetable tt;
  load_stops(dataset_dir, tt);
  load_routes(dataset_dir, tt);
  load_trips(dataset_dir, tt);
  load_stop_times(dataset_dir, tt);
  load_transfers(dataset_dir, tt);
  validate_and_finalize(tt);
  return tt;
}

void save_dataset(const timetable& tt, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out) {
      throw io_error("cannot write " + (dir / name).string());
    }
    return out;
  };

  {
    auto out = open("stops.csv");
    out << "id,name,buffer_time\n";
    for (std::size_t s = 0; s < tt.stops.size(); ++s) {
      out << s << ',' << tt.stops[s].name << ',' << tt.stops[s].buffer_time << '\n';
    }
  }
  {
    auto out = open("routes.csv");
    out << "id,stop_sequence\n";
    for (std::size_t r = 0; r < tt.routes.size(); ++r) {
      out << r << ',';
      const auto& seq = tt.routes[r].stop_sequence;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out << ';';
        out << seq[i];
      }
      out << '\n';
    }
  }
  {
    auto out = open("trips.csv");
    out << "trip_id,route_id\n";
    for (std::size_t t = 0; t < tt.trips.size(); ++t) {
      out << t << ',' << tt.trips[t].route << '\n';
    }
  }
  {
    auto out = open("stop_times.csv");
    out << "trip_id,seq,stop_id,arr,dep\n";
    for (std::size_t t = 0; t < tt.trips.size(); ++t) {
      const auto& evs = tt.trips[t].events;
      for (std::size_t i = 0; i < evs.size(); ++i) {
        const auto& ev = tt.events[evs[i]];
        out << t << ',' << i << ',' << ev.stop << ',' << ev.arr << ',' << ev.dep << '\n';
      }
    }
  }
  {
    auto out = open("transfers.csv");
    out << "from,to,travel_time\n";
    for (vertex_idx v = 0; v < tt.graph.num_vertices(); ++v) {
      for (const auto& e : tt.graph.out[v]) {
        out << v << ',' << e.to << ',' << e.travel_time << '\n';
      }
    }
  }
}

}  // namespace transit
