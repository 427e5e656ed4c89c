#pragma once

#include <string>

#include <json.hpp>

#include "thetalab/check.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/partition.hpp"
#include "thetalab/relations.hpp"

namespace thetalab {

inline nlohmann::json edge_json(const Graph& g, int e) {
    return nlohmann::json::array({e, g.edge(e).first, g.edge(e).second});
}

inline nlohmann::json graph_json(const std::string& name, const Graph& g) {
    return {{"name", name}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

/// Classes in canonical order, each edge as [id, u, v].
inline nlohmann::json partition_json(const Graph& g, const EdgePartition& part) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : part.classes) {
        nlohmann::json members = nlohmann::json::array();
        for (int e : cls) members.push_back(edge_json(g, e));
        classes.push_back(std::move(members));
    }
    return classes;
}

inline nlohmann::json pairs_json(const EdgeRelationPairs& rel) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [e, f] : rel.pairs) out.push_back(nlohmann::json::array({e, f}));
    return out;
}

inline nlohmann::json check_json(const std::string& name, const CheckReport& rep) {
    nlohmann::json out = {{"name", name}, {"ok", rep.ok}, {"checked", rep.checked}};
    if (!rep.ok) out["witness"] = rep.witness;
    return out;
}

} // namespace thetalab
