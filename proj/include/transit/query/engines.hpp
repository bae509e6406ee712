#pragma once

#include <optional>

#include "transit/query/journey.hpp"
#include "transit/query/prepared.hpp"

namespace transit {

enum class engine_kind { csa, raptor, raptor_ep, tb, td_dijkstra, oracle };

enum class tb_activation { use_annotations, ignore_annotations };

struct engine_config {
  engine_kind kind = engine_kind::oracle;
  int max_rounds = 8;
  bool early_pruning = false;
  tb_activation activation = tb_activation::use_annotations;
};

// Earliest-arrival sweep over the delayed connection array; transfers are
// single edges of the augmented graph, endpoints are resolved by Dijkstra.
// Requires attach_stop_shortcuts.
std::optional<journey> csa_query(const prepared_network& net, const query& q);

// Round-based bicriteria search over the augmented graph; transfer
// relaxation takes single edges only. Requires attach_stop_shortcuts.
pareto_set raptor_query(const prepared_network& net, const query& q,
                        const engine_config& cfg);

// Trip-Based search over event-level shortcuts. Requires
// attach_event_shortcuts with the set already updated for the scenario.
pareto_set tb_query(const prepared_network& net, const query& q, const engine_config& cfg);

// Time-dependent Dijkstra with dominated-connection filtering. Refuses
// networks with nonzero buffer times (the filtering is unsound there).
std::optional<journey> td_dijkstra_query(const prepared_network& net, const query& q);

// Exact bicriteria reference: per-round Dijkstra transfer relaxation over the
// full base graph. Ground truth for all accuracy evaluation.
pareto_set oracle_query(const prepared_network& net, const query& q,
                        const engine_config& cfg);

const char* engine_name(engine_kind k);
bool engine_single_criterion(engine_kind k);

}  // namespace transit
