#include "transit/query/engines.hpp"

namespace transit {

const char* engine_name(engine_kind k) {
  switch (k) {
    case engine_kind::csa: return "csa";
    case engine_kind::raptor: return "raptor";
    case engine_kind::raptor_ep: return "raptor-ep";
    case engine_kind::tb: return "tb";
    case engine_kind::td_dijkstra: return "td-dijkstra";
    case engine_kind::oracle: return "oracle";
  }
  return "?";
}

bool engine_single_criterion(engine_kind k) {
  return k == engine_kind::csa || k == engine_kind::td_dijkstra;
}

}  // namespace transit
