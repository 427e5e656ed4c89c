#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "thetalab/error.hpp"

namespace thetalab {

using Edge = std::pair<int, int>; // endpoints, stored with first < second

/// Immutable simple connected graph. Vertices are 0..n-1; edge ids are
/// assigned in input order and index both `edges` and the relation/partition
/// machinery built on top.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
    // adj[v] = (neighbor, edge id), sorted by neighbor.
    std::vector<std::vector<std::pair<int, int>>> adj;

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    const Edge& edge(int e) const { return edges[e]; }

    // Edge id of {u,v}, or -1 when not adjacent.
    int edge_id(int u, int v) const {
        const auto& row = adj[u];
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, -1));
        if (it != row.end() && it->first == v) return it->second;
        return -1;
    }

    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

    // The endpoint of e that is not v.
    int other_endpoint(int e, int v) const {
        const Edge& uv = edges[e];
        return uv.first == v ? uv.second : uv.first;
    }
};

namespace detail {

inline bool connected_from(const Graph& g, int start, std::vector<char>& seen) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : g.adj[v]) {
            (void)e;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.n;
}

} // namespace detail

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n, 0);
    return detail::connected_from(g, 0, seen);
}

/// Builds a Graph from unordered vertex pairs. Pairs are normalized to
/// u < v; edge ids follow input order. n is inferred as max vertex + 1
/// unless given. Rejects loops, duplicates, and disconnected input.
inline Graph build_graph(const std::vector<Edge>& edge_pairs, int n = -1) {
    int max_vertex = -1;
    for (const auto& [u, v] : edge_pairs) {
        if (u < 0 || v < 0) fail(ErrorKind::SyntaxError, "negative vertex id");
        max_vertex = std::max({max_vertex, u, v});
    }
    if (n < 0) n = max_vertex + 1;
    if (max_vertex >= n)
        fail(ErrorKind::SyntaxError,
             "vertex id " + std::to_string(max_vertex) + " out of range for n=" + std::to_string(n));

    Graph g;
    g.n = n;
    g.adj.resize(n);
    g.edges.reserve(edge_pairs.size());
    for (const auto& pair : edge_pairs) {
        int u = std::min(pair.first, pair.second);
        int v = std::max(pair.first, pair.second);
        if (u == v)
            fail(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
        if (g.edge_id(u, v) >= 0)
            fail(ErrorKind::DuplicateEdge,
                 "edge {" + std::to_string(u) + "," + std::to_string(v) + "} repeated");
        int id = g.edge_count();
        g.edges.emplace_back(u, v);
        g.adj[u].emplace_back(v, id);
        g.adj[v].emplace_back(u, id);
        // keep rows sorted so edge_id stays a binary search
        std::sort(g.adj[u].begin(), g.adj[u].end());
        std::sort(g.adj[v].begin(), g.adj[v].end());
    }
    if (!is_connected(g))
        fail(ErrorKind::Disconnected, "input graph is not connected");
    return g;
}

/// Two-coloring witness when bipartite, an odd closed walk (as a vertex
/// cycle) when not.
struct BipartitenessWitness {
    bool bipartite = false;
    std::vector<int> side;      // per-vertex 0/1, valid when bipartite
    std::vector<int> odd_cycle; // vertex list of an odd cycle, valid otherwise
};

inline BipartitenessWitness is_bipartite(const Graph& g) {
    BipartitenessWitness w;
    w.side.assign(g.n, -1);
    std::vector<int> parent(g.n, -1);
    std::queue<int> queue;
    w.side[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (auto [u, e] : g.adj[v]) {
            (void)e;
            if (w.side[u] == -1) {
                w.side[u] = 1 - w.side[v];
                parent[u] = v;
                queue.push(u);
            } else if (w.side[u] == w.side[v]) {
                // climb to the common ancestor of u and v; the two tree paths
                // plus edge {u,v} close an odd cycle
                std::vector<int> from_v{v}, from_u{u};
                std::vector<char> on_v_path(g.n, 0);
                for (int x = v; x != -1; x = parent[x]) on_v_path[x] = 1;
                int meet = u;
                while (!on_v_path[meet]) {
                    meet = parent[meet];
                    from_u.push_back(meet);
                }
                while (from_v.back() != meet) from_v.push_back(parent[from_v.back()]);
                from_v.pop_back(); // drop the meet vertex, from_u already ends with it
                std::reverse(from_u.begin(), from_u.end());
                // cycle: meet .. u, then v .. back toward meet
                w.odd_cycle = from_u;
                w.odd_cycle.insert(w.odd_cycle.end(), from_v.begin(), from_v.end());
                w.bipartite = false;
                w.side.clear();
                return w;
            }
        }
    }
    w.bipartite = true;
    return w;
}

} // namespace thetalab
