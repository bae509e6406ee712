#include "transit/delay/scenario.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "transit/core/errors.hpp"

namespace transit {

time_sec delay_scenario::delay_of(const stop_event& ev) const {
  auto it = std::lower_bound(incidents.begin(), incidents.end(), ev.trip,
                             [](const incident& in, trip_idx t) { return in.trip < t; });
  if (it == incidents.end() || it->trip != ev.trip || ev.index_in_trip < it->start_index) {
    return 0;
  }
  return it->delay;
}

delayed_times apply_delay(const stop_event& ev, const delay_scenario& sc) {
  return {ev.arr + sc.arr_delay(ev), ev.dep + sc.dep_delay(ev)};
}

bool validate_scenario(const delay_scenario& sc, time_sec delta_max) {
  for (const auto& in : sc.incidents) {
    if (in.delay < 0 || in.delay > delta_max) {
      return false;
    }
  }
  return true;
}

delay_scenario uniform_scenario(const timetable& tt, time_sec d) {
  delay_scenario sc;
  sc.delta_max = d;
  sc.window = {0, k_day_max};
  if (d > 0) {
    sc.incidents.reserve(tt.trips.size());
    for (trip_idx t = 0; t < tt.trips.size(); ++t) {
      sc.incidents.push_back({t, 0, d});
    }
  }
  return sc;
}

void normalize_scenario(delay_scenario& sc, const timetable& tt) {
  std::sort(sc.incidents.begin(), sc.incidents.end(),
            [](const incident& a, const incident& b) { return a.trip < b.trip; });
  for (std::size_t i = 0; i < sc.incidents.size(); ++i) {
    const auto& in = sc.incidents[i];
    if (in.trip >= tt.trips.size()) {
      throw validation_error("scenario references unknown trip " + std::to_string(in.trip));
    }
    if (in.start_index >= tt.trips[in.trip].events.size()) {
      throw validation_error("scenario incident start_index out of range for trip " +
                             std::to_string(in.trip));
    }
    if (in.delay < 0) {
      throw validation_error("scenario incident has negative delay");
    }
    if (i > 0 && sc.incidents[i - 1].trip == in.trip) {
      throw validation_error("scenario has multiple incidents for trip " +
                             std::to_string(in.trip));
    }
  }
}

delay_scenario load_scenario(const std::filesystem::path& file, const timetable& tt) {
  std::ifstream in(file);
  if (!in) {
    throw io_error("cannot open " + file.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(file.string(), 0, e.what());
  }
  delay_scenario sc;
  sc.seed = j.at("seed").get<std::uint64_t>();
  sc.delta_max = j.at("delta_max").get<time_sec>();
  sc.window.start = j.at("window").at(0).get<time_sec>();
  sc.window.end = j.at("window").at(1).get<time_sec>();
  for (const auto& e : j.at("incidents")) {
    sc.incidents.push_back({e.at("trip").get<trip_idx>(),
                            e.at("start_index").get<std::uint32_t>(),
                            e.at("delay").get<time_sec>()});
  }
  normalize_scenario(sc, tt);
  return sc;
}

void save_scenario(const delay_scenario& sc, const std::filesystem::path& file) {
  nlohmann::json j;
  j["seed"] = sc.seed;
  j["delta_max"] = sc.delta_max;
  j["window"] = {sc.window.start, sc.window.end};
  auto& arr = j["incidents"] = nlohmann::json::array();
  for (const auto& in : sc.incidents) {
    arr.push_back({{"trip", in.trip}, {"start_index", in.start_index}, {"delay", in.delay}});
  }
  std::ofstream out(file);
  if (!out) {
    throw io_error("cannot write " + file.string());
  }
  out << j.dump(2) << '\n';
}

}  // namespace transit
