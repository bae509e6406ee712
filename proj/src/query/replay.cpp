#include "transit/query/replay.hpp"

#include "transit/timetable/graph_search.hpp"

namespace transit {

namespace {

std::string fail(const std::string& msg) { return msg; }

}  // namespace

std::optional<std::string> replay_journey(const journey& j, const prepared_network& net,
                                          const query& q, const transfer_graph& walk_graph) {
  const auto& tt = *net.tt;
  vertex_idx at = q.source;
  time_sec now = q.dep_time;
  bool standing = true;  // at the source before any movement
  int rides = 0;

  for (const auto& leg : j.legs) {
    if (leg.type == journey_leg::kind::walk) {
      if (leg.from != at) {
        return fail("walk leg starts at vertex " + std::to_string(leg.from) +
                    " but the passenger is at " + std::to_string(at));
      }
      if (leg.single_edge) {
        bool found = false;
        for (const auto& e : walk_graph.out[leg.from]) {
          if (e.to == leg.to && e.travel_time == leg.walk_time) {
            found = true;
            break;
          }
        }
        if (!found) {
          return fail("no edge (" + std::to_string(leg.from) + "," + std::to_string(leg.to) +
                      ") with travel time " + std::to_string(leg.walk_time));
        }
      } else {
        const auto dist = dijkstra_from(walk_graph, leg.from);
        if (dist[leg.to] != leg.walk_time) {
          return fail("walk leg time " + std::to_string(leg.walk_time) +
                      " does not match shortest distance " + std::to_string(dist[leg.to]));
        }
      }
      now += leg.walk_time;
      at = leg.to;
      standing = false;
    } else {
      const auto& board = tt.events[leg.board];
      const auto& alight = tt.events[leg.alight];
      if (board.trip != leg.trip || alight.trip != leg.trip) {
        return fail("ride leg events belong to another trip");
      }
      if (board.index_in_trip >= alight.index_in_trip) {
        return fail("ride leg alights at or before its boarding event");
      }
      if (board.stop != at) {
        return fail("ride leg boards at stop " + std::to_string(board.stop) +
                    " but the passenger is at " + std::to_string(at));
      }
      const auto thld = standing ? now : now + tt.buffer(board.stop);
      if (net.dep_of(leg.board) < thld) {
        return fail("boarding at " + format_time(net.dep_of(leg.board)) +
                    " misses the change threshold " + format_time(thld));
      }
      now = net.arr_of(leg.alight);
      at = alight.stop;
      standing = false;
      ++rides;
    }
  }

  if (at != q.target) {
    return fail("journey ends at " + std::to_string(at) + ", not the target");
  }
  if (now != j.arrival) {
    return fail("leg chain arrives at " + format_time(now) + " but the journey claims " +
                format_time(j.arrival));
  }
  if (rides != j.num_trips) {
    return fail("journey counts " + std::to_string(j.num_trips) + " trips but has " +
                std::to_string(rides) + " ride legs");
  }
  return std::nullopt;
}

}  // namespace transit
