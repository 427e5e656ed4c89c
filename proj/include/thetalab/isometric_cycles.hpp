#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "thetalab/check.hpp"
#include "thetalab/distance.hpp"
#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/relations.hpp"
#include "thetalab/subdivision.hpp"

namespace thetalab {

/// Simple cycle stored in canonical form: smallest vertex first, then the
/// lexicographically smaller of the two directions.
struct CycleSubgraph {
    std::vector<int> vertices;
    std::vector<int> edge_ids; // edge_ids[i] joins vertices[i] and vertices[i+1 mod L]

    int length() const { return static_cast<int>(vertices.size()); }
};

inline CycleSubgraph make_cycle(const Graph& g, const std::vector<int>& verts) {
    int len = static_cast<int>(verts.size());
    if (len < 3) fail(ErrorKind::ConsistencyError, "cycle needs at least 3 vertices");
    int start = static_cast<int>(std::min_element(verts.begin(), verts.end()) - verts.begin());
    std::vector<int> forward(len), backward(len);
    for (int i = 0; i < len; ++i) {
        forward[i] = verts[(start + i) % len];
        backward[i] = verts[(start - i % len + len) % len];
    }
    CycleSubgraph c;
    c.vertices = std::min(forward, backward);
    c.edge_ids.resize(len);
    for (int i = 0; i < len; ++i) {
        int id = g.edge_id(c.vertices[i], c.vertices[(i + 1) % len]);
        if (id < 0)
            fail(ErrorKind::ConsistencyError,
                 "consecutive cycle vertices " + std::to_string(c.vertices[i]) + "," +
                     std::to_string(c.vertices[(i + 1) % len]) + " are not adjacent");
        c.edge_ids[i] = id;
    }
    return c;
}

/// All simple cycles of length <= max_len through edge e. A cycle through
/// e = {u,v} minus e is exactly one v-u path, so the path search finds each
/// cycle once; distance pruning cuts dead branches.
inline std::vector<CycleSubgraph> cycles_through_edge(const Graph& g, const DistanceMatrix& dm,
                                                      int e, int max_len) {
    if (max_len < 3) return {};
    auto [u, v] = g.edge(e);
    std::vector<CycleSubgraph> out;
    std::vector<int> path = {v};
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[v] = 1;

    auto dfs = [&](auto&& self, int w, int edges_used) -> void {
        for (auto [x, eid] : g.adj[w]) {
            if (eid == e) continue;
            if (x == u) {
                if (edges_used >= 1) {
                    std::vector<int> cyc = path;
                    cyc.push_back(u);
                    out.push_back(make_cycle(g, cyc));
                }
                continue;
            }
            if (on_path[x]) continue;
            if (edges_used + 1 + dm.at(x, u) + 1 > max_len) continue;
            on_path[x] = 1;
            path.push_back(x);
            self(self, x, edges_used + 1);
            path.pop_back();
            on_path[x] = 0;
        }
    };
    dfs(dfs, v, 0);

    std::sort(out.begin(), out.end(), [](const CycleSubgraph& a, const CycleSubgraph& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return out;
}

inline bool is_isometric_cycle(const Graph&, const DistanceMatrix& dm, const CycleSubgraph& c) {
    int len = c.length();
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            int along = std::min(j - i, len - (j - i));
            if (dm.at(c.vertices[i], c.vertices[j]) != along) return false;
        }
    return true;
}

/// Cycles sharing exactly one edge whose union (as an edge subgraph) sits
/// isometrically in g.
struct TouchingPair {
    CycleSubgraph first;
    CycleSubgraph second;
    int shared_edge;
};

namespace detail {

inline std::vector<int> shared_edges(const CycleSubgraph& a, const CycleSubgraph& b) {
    std::vector<int> ea = a.edge_ids, eb = b.edge_ids;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    std::vector<int> common;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                          std::back_inserter(common));
    return common;
}

} // namespace detail

inline bool is_touching_pair(const Graph& g, const DistanceMatrix& dm, const CycleSubgraph& c1,
                             const CycleSubgraph& c2) {
    std::vector<int> common = detail::shared_edges(c1, c2);
    if (common.size() != 1) return false;
    std::vector<int> union_edges = c1.edge_ids;
    union_edges.insert(union_edges.end(), c2.edge_ids.begin(), c2.edge_ids.end());
    std::sort(union_edges.begin(), union_edges.end());
    union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());
    return is_isometric_edge_subgraph(g, dm, union_edges);
}

/// Bounded search for two cycles touching exactly at e; empty result means
/// none within the length bound, not nonexistence.
inline std::optional<TouchingPair> find_touching_pair_for_edge(const Graph& g,
                                                               const DistanceMatrix& dm, int e,
                                                               int max_len = 12) {
    std::vector<CycleSubgraph> cycles = cycles_through_edge(g, dm, e, max_len);
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (is_touching_pair(g, dm, cycles[i], cycles[j]))
                return TouchingPair{cycles[i], cycles[j], e};
    return std::nullopt;
}

/// A touching pair forces the two half-edges of the shared edge into one
/// class of the subdivided closure.
inline CheckReport touching_pair_half_merge_check(const Graph& g, const TouchingPair& pair) {
    CheckReport rep;
    SubdividedGraph s = subdivide(g);
    EdgePartition star_s = theta_star(s.graph);
    ++rep.checked;
    if (!halfedges_merged(star_s, s.map, pair.shared_edge))
        rep.fail_with("half-edges of shared edge " + std::to_string(pair.shared_edge) +
                      " in different classes");
    return rep;
}

} // namespace thetalab
