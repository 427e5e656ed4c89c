#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "thetalab/distance.hpp"
#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/parallel.hpp"
#include "thetalab/partition.hpp"

namespace thetalab {

/// Symmetric relation on edge ids, stored as sorted (e, f) pairs with e < f.
/// Reflexive pairs are implicit and never stored.
struct EdgeRelationPairs {
    std::vector<std::pair<int, int>> pairs;

    bool contains(int e, int f) const {
        if (e == f) return true;
        if (e > f) std::swap(e, f);
        return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(e, f));
    }

    int size() const { return static_cast<int>(pairs.size()); }
};

/// e = xy, f = uv are related iff d(x,u) + d(y,v) != d(x,v) + d(y,u).
inline bool theta_related(const DistanceMatrix& dist, const Edge& e, const Edge& f) {
    return dist.at(e.first, f.first) + dist.at(e.second, f.second) !=
           dist.at(e.first, f.second) + dist.at(e.second, f.first);
}

inline EdgeRelationPairs theta_pairs(const Graph& g, const DistanceMatrix& dist) {
    int m = g.edge_count();
    std::vector<std::vector<std::pair<int, int>>> rows(m);
    parallel_for(m, [&](int e) {
        for (int f = e + 1; f < m; ++f)
            if (theta_related(dist, g.edge(e), g.edge(f)))
                rows[e].emplace_back(e, f);
    });
    EdgeRelationPairs rel;
    for (auto& row : rows)
        rel.pairs.insert(rel.pairs.end(), row.begin(), row.end());
    return rel;
}

inline EdgeRelationPairs theta_pairs(const Graph& g) {
    return theta_pairs(g, all_pairs_distances(g));
}

/// Transitive closure of the relation, as an edge partition.
inline EdgePartition closure_partition(int edge_count, const EdgeRelationPairs& rel) {
    DisjointSets sets(edge_count);
    for (auto [e, f] : rel.pairs) sets.unite(e, f);
    return partition_from_dsu(sets);
}

inline EdgePartition theta_star(const Graph& g, const DistanceMatrix& dist) {
    return closure_partition(g.edge_count(), theta_pairs(g, dist));
}

inline EdgePartition theta_star(const Graph& g) {
    return theta_star(g, all_pairs_distances(g));
}

/// In a bipartite graph, related edges e, f admit an orientation e = uv,
/// f = xy with d(u,x) = d(v,y) = d(u,y) - 1 = d(v,x) - 1.
struct BipartiteThetaWitness {
    int u, v;
    int x, y;
    int d_ux, d_vy, d_uy, d_vx;
};

inline BipartiteThetaWitness bipartite_theta_witness(const Graph& g,
                                                     const DistanceMatrix& dm,
                                                     int e, int f) {
    if (!is_bipartite(g).bipartite)
        fail(ErrorKind::NotBipartite, "witness orientation needs a bipartite graph");
    if (e != f && !theta_related(dm, g.edge(e), g.edge(f)))
        fail(ErrorKind::NotInTheta,
             "edges " + std::to_string(e) + " and " + std::to_string(f) + " are not related");
    auto [a, b] = g.edge(e);
    auto [c, d] = g.edge(f);
    const int us[4] = {a, a, b, b};
    const int vs[4] = {b, b, a, a};
    const int xs[4] = {c, d, c, d};
    const int ys[4] = {d, c, d, c};
    for (int i = 0; i < 4; ++i) {
        int k = dm.at(us[i], xs[i]);
        if (dm.at(vs[i], ys[i]) == k && dm.at(us[i], ys[i]) == k + 1 &&
            dm.at(vs[i], xs[i]) == k + 1)
            return {us[i], vs[i], xs[i], ys[i], k, k, k + 1, k + 1};
    }
    fail(ErrorKind::ConsistencyError, "no orientation matched the bipartite distance pattern");
}

/// Partial cube test: bipartite and the relation already transitive, i.e.
/// every two edges in a common closure class are directly related.
inline bool is_partial_cube(const Graph& g, const DistanceMatrix& dm) {
    if (!is_bipartite(g).bipartite) return false;
    EdgeRelationPairs rel = theta_pairs(g, dm);
    EdgePartition star = closure_partition(g.edge_count(), rel);
    for (const auto& cls : star.classes)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (!rel.contains(cls[i], cls[j])) return false;
    return true;
}

inline bool is_partial_cube(const Graph& g) {
    return is_partial_cube(g, all_pairs_distances(g));
}

/// Sum of distances over unordered vertex pairs, straight from BFS.
inline std::int64_t wiener_bfs(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::int64_t> per_source(n, 0);
    parallel_for(n, [&](int s) {
        std::vector<int> row = bfs_distances(g, s);
        std::int64_t sum = 0;
        for (int v = 0; v < n; ++v) sum += row[v];
        per_source[s] = sum;
    });
    std::int64_t total = 0;
    for (std::int64_t s : per_source) total += s;
    return total / 2;
}

/// Cut method: on a partial cube, removing a relation class splits the graph
/// into two sides, and the Wiener index is the sum of side products.
inline std::int64_t wiener_via_cuts(const Graph& g) {
    DistanceMatrix dm = all_pairs_distances(g);
    if (!is_partial_cube(g, dm))
        fail(ErrorKind::NotPartialCube, "cut method needs a partial cube");
    EdgePartition star = theta_star(g, dm);

    int n = g.vertex_count();
    std::int64_t total = 0;
    for (int c = 0; c < star.class_count(); ++c) {
        // Component count of g minus class c, via BFS skipping its edges.
        std::vector<char> removed(g.edge_count(), 0);
        for (int e : star.classes[c]) removed[e] = 1;
        std::vector<int> comp(n, -1);
        int comps = 0;
        std::vector<int> queue;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1) continue;
            comp[s] = comps;
            queue.assign(1, s);
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                for (auto [w, e] : g.adj[v]) {
                    if (removed[e] || comp[w] != -1) continue;
                    comp[w] = comps;
                    queue.push_back(w);
                }
            }
            ++comps;
        }
        if (comps != 2)
            fail(ErrorKind::ClassRemovalNotTwoComponents,
                 "class " + std::to_string(c) + " removal left " + std::to_string(comps) +
                     " components");
        std::int64_t side0 = 0;
        for (int v = 0; v < n; ++v)
            if (comp[v] == 0) ++side0;
        total += side0 * (n - side0);
    }
    return total;
}

} // namespace thetalab
