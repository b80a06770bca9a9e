#pragma once

#include <nlohmann/json.hpp>

#include "tds/characterizations.hpp"
#include "tds/graph.hpp"
#include "tds/hypergraph.hpp"
#include "tds/solver.hpp"

namespace tds {

/// {"gamma_grt": {"value": 4, "witness": [...], "micros": 12}, ...}
/// Witnesses are vertex sequences, vertex sets (sorted ids), game traces or
/// matchings ([[u, v], ...]). Keys appear only for computed invariants.
nlohmann::json to_json(const InvariantReport& report);

/// {"order": n, "graph6": "...", "edges": [[u, v], ...]}
nlohmann::json graph_json(const Graph& g);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const FamilyTCertificate& certificate);
nlohmann::json to_json(const RegularGreedyResult& result);
nlohmann::json to_json(const IncidenceCheck& check);

}  // namespace tds
