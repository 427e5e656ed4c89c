#pragma once

#include <algorithm>
#include <vector>

#include "thetalab/graph.hpp"
#include "thetalab/parallel.hpp"

namespace thetalab {

/// All-pairs hop distances, stored dense. Desk-scale instances stay small
/// (n <= ~2000 after subdivision), so the n*n layout keeps the O(m^2)
/// relation scan cache-friendly.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, -1) {}

    int size() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    int& at(int u, int v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

namespace detail {

// BFS distances from one source written into row[0..n).
inline void bfs_row(const Graph& g, int source, int* row) {
    std::fill(row, row + g.n, -1);
    std::vector<int> frontier{source};
    row[source] = 0;
    std::vector<int> next;
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        next.clear();
        for (int v : frontier) {
            for (auto [w, e] : g.adj[v]) {
                (void)e;
                if (row[w] == -1) {
                    row[w] = depth;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
}

} // namespace detail

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> row(g.n);
    detail::bfs_row(g, source, row.data());
    return row;
}

// BFS tree with the smallest-id parent rule: deterministic shortest paths.
inline std::vector<int> bfs_parents(const Graph& g, int source) {
    std::vector<int> parent(g.n, -2), dist(g.n, -1);
    std::vector<int> frontier{source}, next;
    parent[source] = -1;
    dist[source] = 0;
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        next.clear();
        for (int v : frontier) { // frontier is ascending, adj rows are sorted
            for (auto [w, e] : g.adj[v]) {
                (void)e;
                if (dist[w] == -1) {
                    dist[w] = depth;
                    parent[w] = v;
                    next.push_back(w);
                }
            }
        }
        std::sort(next.begin(), next.end());
        frontier.swap(next);
    }
    return parent;
}

// One shortest u..v path as a vertex list, deterministic via bfs_parents.
inline std::vector<int> shortest_path(const Graph& g, int u, int v) {
    std::vector<int> parent = bfs_parents(g, u);
    std::vector<int> path{v};
    while (path.back() != u) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix dm(g.n);
    parallel_for(g.n, [&](int source) { detail::bfs_row(g, source, &dm.at(source, 0)); });
    return dm;
}

inline int vertex_edge_distance(const DistanceMatrix& dm, int x, const Edge& e) {
    return std::min(dm.at(x, e.first), dm.at(x, e.second));
}

inline int edge_edge_distance(const DistanceMatrix& dm, const Edge& e, const Edge& f) {
    return std::min(std::min(dm.at(e.first, f.first), dm.at(e.first, f.second)),
                    std::min(dm.at(e.second, f.first), dm.at(e.second, f.second)));
}

/// Induced-subgraph isometry: distances inside g[subset] equal distances in
/// g for every vertex pair of the subset. False when g[subset] is
/// disconnected.
inline bool is_isometric_subgraph(const Graph& g, const DistanceMatrix& dm,
                                  const std::vector<int>& subset) {
    int k = static_cast<int>(subset.size());
    if (k == 0) return false;
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < k; ++i) local[subset[i]] = i;

    std::vector<std::vector<int>> sub_adj(k);
    for (int i = 0; i < k; ++i)
        for (auto [w, e] : g.adj[subset[i]]) {
            (void)e;
            if (local[w] >= 0) sub_adj[i].push_back(local[w]);
        }

    std::vector<int> dist(k);
    std::vector<int> frontier, next;
    for (int s = 0; s < k; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        frontier.assign(1, s);
        int depth = 0;
        while (!frontier.empty()) {
            ++depth;
            next.clear();
            for (int v : frontier)
                for (int w : sub_adj[v])
                    if (dist[w] == -1) {
                        dist[w] = depth;
                        next.push_back(w);
                    }
            frontier.swap(next);
        }
        for (int t = 0; t < k; ++t)
            if (dist[t] != dm.at(subset[s], subset[t])) return false;
    }
    return true;
}

/// Edge-subgraph isometry: the subgraph spanned by edge_ids (its endpoints,
/// those edges only) preserves g's distances. This is the notion cycle
/// unions are tested against; the induced predicate would silently pick up
/// chords.
inline bool is_isometric_edge_subgraph(const Graph& g, const DistanceMatrix& dm,
                                       const std::vector<int>& edge_ids) {
    std::vector<int> local(g.n, -1);
    std::vector<int> vertices;
    for (int e : edge_ids)
        for (int v : {g.edges[e].first, g.edges[e].second})
            if (local[v] == -1) {
                local[v] = static_cast<int>(vertices.size());
                vertices.push_back(v);
            }
    int k = static_cast<int>(vertices.size());
    if (k == 0) return false;

    std::vector<std::vector<int>> sub_adj(k);
    for (int e : edge_ids) {
        int a = local[g.edges[e].first], b = local[g.edges[e].second];
        sub_adj[a].push_back(b);
        sub_adj[b].push_back(a);
    }

    std::vector<int> dist(k);
    std::vector<int> frontier, next;
    for (int s = 0; s < k; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        frontier.assign(1, s);
        int depth = 0;
        while (!frontier.empty()) {
            ++depth;
            next.clear();
            for (int v : frontier)
                for (int w : sub_adj[v])
                    if (dist[w] == -1) {
                        dist[w] = depth;
                        next.push_back(w);
                    }
            frontier.swap(next);
        }
        for (int t = 0; t < k; ++t)
            if (dist[t] != dm.at(vertices[s], vertices[t])) return false;
    }
    return true;
}

} // namespace thetalab
