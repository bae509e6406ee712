#pragma once

#include <string>
#include <vector>

#include "transit/core/types.hpp"

namespace transit {

struct stop {
  std::string name;
  time_sec buffer_time = 0;  // minimum change time for transferring passengers
};

struct stop_event {
  stop_idx stop = 0;
  time_sec arr = 0;
  time_sec dep = 0;
  trip_idx trip = 0;
  std::uint32_t index_in_trip = 0;
};

struct trip {
  route_idx route = 0;
  std::vector<event_idx> events;  // in travel order
};

struct route {
  std::vector<stop_idx> stop_sequence;
  std::vector<trip_idx> trips;  // sorted by departure of first event
};

struct transfer_edge {
  vertex_idx to = 0;
  time_sec travel_time = 0;
};

// Directed graph over stops plus optional auxiliary vertices. No closure or
// acyclicity is assumed. Outgoing edges are kept sorted by travel time,
// which Early Pruning relies on.
struct transfer_graph {
  stop_idx num_stops = 0;
  std::vector<std::vector<transfer_edge>> out;
  std::vector<std::vector<transfer_edge>> in;

  std::size_t num_vertices() const { return out.size(); }
  std::size_t num_edges() const;

  void ensure_vertex(vertex_idx v);
  void add_edge(vertex_idx from, vertex_idx to, time_sec travel_time);
  void sort_by_travel_time();
};

// One elementary vehicle movement between consecutive stop events of a trip.
struct connection {
  stop_idx dep_stop = 0;
  stop_idx arr_stop = 0;
  time_sec dep_time = 0;
  time_sec arr_time = 0;
  trip_idx trip = 0;
  std::uint32_t event_index = 0;  // index of the departing event within the trip
};

struct timetable {
  std::vector<stop> stops;
  std::vector<route> routes;
  std::vector<trip> trips;
  std::vector<stop_event> events;
  transfer_graph graph;
  std::vector<connection> connections;  // sorted by (dep_time, trip, event_index)

  // events serving each stop, sorted by scheduled departure
  std::vector<std::vector<event_idx>> events_at_stop;

  time_sec buffer(stop_idx s) const { return stops[s].buffer_time; }
  bool has_nonzero_buffer() const;
};

// Validates all cross-references and time invariants, sorts route trip lists,
// builds the connection array and per-stop event index. Throws
// validation_error on the first violation, naming the offending entity.
void validate_and_finalize(timetable& tt);

}  // namespace transit
