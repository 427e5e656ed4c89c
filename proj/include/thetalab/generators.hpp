#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thetalab/blocks.hpp"
#include "thetalab/chordal.hpp"
#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/planar.hpp"

namespace thetalab {

struct EmbeddedGraph {
    Graph graph;
    std::vector<std::vector<int>> rotation; // per-vertex cyclic neighbor order
};

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return build_graph(edges, n);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return build_graph(edges, n);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return build_graph(edges, n);
}

inline Graph hypercube_graph(int dims) {
    int n = 1 << dims;
    std::vector<Edge> edges;
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < dims; ++b)
            if (!(x >> b & 1)) edges.push_back({x, x | (1 << b)});
    return build_graph(edges, n);
}

inline Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
    for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
    for (int i = 0; i < 5; ++i) {
        int a = 5 + i, b = 5 + (i + 2) % 5;
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return build_graph(edges, 10);
}

/// Builds a rotation system from an explicit face list (every undirected
/// edge on exactly two faces). Face orientations in the input are arbitrary;
/// they are flipped into a consistent global orientation by propagation, then
/// each vertex's rotation is read off the directed corners.
inline EmbeddedGraph rotation_from_faces(const Graph& g,
                                         const std::vector<std::vector<int>>& faces) {
    int n = g.vertex_count();
    int m = g.edge_count();
    int f = static_cast<int>(faces.size());

    // (face, position) incidences per undirected edge.
    std::vector<std::vector<std::pair<int, int>>> edge_faces(m);
    for (int fi = 0; fi < f; ++fi) {
        const auto& walk = faces[fi];
        int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i) {
            int u = walk[i], v = walk[(i + 1) % len];
            int e = g.edge_id(std::min(u, v), std::max(u, v));
            if (e < 0)
                fail(ErrorKind::ConsistencyError, "face " + std::to_string(fi) +
                                                      " uses non-edge " + std::to_string(u) +
                                                      "-" + std::to_string(v));
            edge_faces[e].push_back({fi, i});
        }
    }
    for (int e = 0; e < m; ++e)
        if (edge_faces[e].size() != 2)
            fail(ErrorKind::ConsistencyError,
                 "edge " + std::to_string(e) + " lies on " +
                     std::to_string(edge_faces[e].size()) + " faces, expected 2");

    // Propagate orientation: neighboring faces must traverse their shared
    // edge in opposite directions.
    auto forward = [&](int fi, int pos) {
        const auto& walk = faces[fi];
        int u = walk[pos], v = walk[(pos + 1) % walk.size()];
        return u < v;
    };
    std::vector<int> flip(f, -1);
    flip[0] = 0;
    std::vector<int> queue = {0};
    int seen = 1;
    while (!queue.empty()) {
        int fi = queue.back();
        queue.pop_back();
        const auto& walk = faces[fi];
        for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
            int u = walk[i], v = walk[(i + 1) % walk.size()];
            int e = g.edge_id(std::min(u, v), std::max(u, v));
            auto [fa, pa] = edge_faces[e][0];
            auto [fb, pb] = edge_faces[e][1];
            int other = fa == fi && pa == i ? fb : fa;
            int other_pos = fa == fi && pa == i ? pb : pa;
            bool eff_here = forward(fi, i) ^ static_cast<bool>(flip[fi]);
            int needed = (forward(other, other_pos) == eff_here) ? 1 : 0;
            if (flip[other] == -1) {
                flip[other] = needed;
                queue.push_back(other);
                ++seen;
            } else if (flip[other] != needed) {
                fail(ErrorKind::ConsistencyError, "face orientations cannot be made consistent");
            }
        }
    }
    if (seen != f)
        fail(ErrorKind::ConsistencyError, "face adjacency is not connected");

    // succ[v]: neighbor u -> neighbor w for each directed corner u -> v -> w.
    std::vector<std::vector<std::pair<int, int>>> succ(n);
    for (int fi = 0; fi < f; ++fi) {
        std::vector<int> walk = faces[fi];
        if (flip[fi]) std::reverse(walk.begin(), walk.end());
        int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i) {
            int u = walk[i], v = walk[(i + 1) % len], w = walk[(i + 2) % len];
            succ[v].push_back({u, w});
        }
    }
    EmbeddedGraph out;
    out.graph = g;
    out.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
        std::sort(succ[v].begin(), succ[v].end());
        int deg = g.degree(v);
        if (static_cast<int>(succ[v].size()) != deg)
            fail(ErrorKind::ConsistencyError,
                 "vertex " + std::to_string(v) + " has inconsistent corner count");
        int cur = g.adj[v].front().first;
        for (int step = 0; step < deg; ++step) {
            out.rotation[v].push_back(cur);
            auto it = std::lower_bound(succ[v].begin(), succ[v].end(), std::make_pair(cur, -1));
            if (it == succ[v].end() || it->first != cur)
                fail(ErrorKind::ConsistencyError,
                     "vertex " + std::to_string(v) + " misses a corner at neighbor " +
                         std::to_string(cur));
            cur = it->second;
        }
        if (cur != out.rotation[v].front() ||
            std::set<int>(out.rotation[v].begin(), out.rotation[v].end()).size() !=
                static_cast<std::size_t>(deg))
            fail(ErrorKind::ConsistencyError,
                 "corners at vertex " + std::to_string(v) + " do not close a single cycle");
    }
    return out;
}

inline EmbeddedGraph embedded_from_faces(const std::vector<Edge>& edges, int n,
                                         const std::vector<std::vector<int>>& faces) {
    return rotation_from_faces(build_graph(edges, n), faces);
}

inline EmbeddedGraph k4_embedded() {
    return rotation_from_faces(complete_graph(4),
                               {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

inline EmbeddedGraph octahedron_embedded() {
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3},
                               {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
    std::vector<std::vector<int>> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                           {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
    return embedded_from_faces(edges, 6, faces);
}

inline EmbeddedGraph cube_embedded() {
    std::vector<std::vector<int>> faces = {{0, 1, 3, 2}, {4, 5, 7, 6}, {0, 1, 5, 4},
                                           {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 3, 7, 5}};
    return rotation_from_faces(hypercube_graph(3), faces);
}

/// Icosahedron: pole 0, upper ring 1..5, lower ring 6..10, pole 11.
inline EmbeddedGraph icosahedron_embedded() {
    auto up = [](int i) { return 1 + (i % 5); };      // i in 1..5
    auto low = [](int i) { return 6 + (i - 1) % 5; }; // i in 1..5
    std::vector<Edge> edges;
    for (int i = 1; i <= 5; ++i) edges.push_back({0, i});
    for (int i = 1; i <= 5; ++i)
        edges.push_back({std::min(i, up(i)), std::max(i, up(i))});
    for (int i = 1; i <= 5; ++i) {
        edges.push_back({std::min(i, low(i)), std::max(i, low(i))});
        edges.push_back({std::min(up(i), low(i)), std::max(up(i), low(i))});
    }
    for (int i = 1; i <= 5; ++i)
        edges.push_back({std::min(low(i), low(i + 1)), std::max(low(i), low(i + 1))});
    for (int i = 1; i <= 5; ++i) edges.push_back({low(i), 11});

    std::vector<std::vector<int>> faces;
    for (int i = 1; i <= 5; ++i) faces.push_back({0, i, up(i)});
    for (int i = 1; i <= 5; ++i) faces.push_back({i, low(i), up(i)});
    for (int i = 1; i <= 5; ++i) faces.push_back({low(i), low(i + 1), up(i)});
    for (int i = 1; i <= 5; ++i) faces.push_back({11, low(i + 1), low(i)});
    return embedded_from_faces(edges, 12, faces);
}

/// Dual polyhedron: one vertex per face, adjacency across shared edges,
/// rotations read along each facial walk.
inline EmbeddedGraph dual_embedded(const Graph& g, const PlanarEmbedding& emb) {
    int f = static_cast<int>(emb.faces.size());
    std::vector<std::vector<int>> face_of_edge(g.edge_count());
    for (int fi = 0; fi < f; ++fi)
        for (int e : emb.faces[fi].edges) face_of_edge[e].push_back(fi);
    std::vector<Edge> dual_edges;
    std::vector<std::vector<int>> rotation(f);
    for (int fi = 0; fi < f; ++fi) {
        for (int e : emb.faces[fi].edges) {
            int other = face_of_edge[e][0] == fi ? face_of_edge[e][1] : face_of_edge[e][0];
            rotation[fi].push_back(other);
            if (fi < other) dual_edges.push_back({fi, other});
        }
    }
    EmbeddedGraph out;
    out.graph = build_graph(dual_edges, f);
    out.rotation = std::move(rotation);
    return out;
}

inline EmbeddedGraph dodecahedron_embedded() {
    EmbeddedGraph ico = icosahedron_embedded();
    return dual_embedded(ico.graph, trace_faces(ico.graph, ico.rotation));
}

/// Vertex truncation: each corner (v, i-th edge in v's rotation) becomes a
/// vertex; rings around old vertices plus shortened old edges; faces are the
/// rings and the doubled old faces.
inline EmbeddedGraph truncate_embedded(const Graph& g, const PlanarEmbedding& emb) {
    int n = g.vertex_count();
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
    auto corner = [&](int v, int e) {
        const auto& rot = emb.rotation[v];
        int pos = static_cast<int>(std::find(rot.begin(), rot.end(), e) - rot.begin());
        return offset[v] + pos;
    };

    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        int deg = g.degree(v);
        for (int i = 0; i < deg; ++i) {
            int a = offset[v] + i, b = offset[v] + (i + 1) % deg;
            if (deg == 2 && i == 1) continue; // both ring edges coincide
            edges.push_back({std::min(a, b), std::max(a, b)});
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        int a = corner(u, e), b = corner(v, e);
        edges.push_back({std::min(a, b), std::max(a, b)});
    }

    std::vector<std::vector<int>> faces;
    for (int v = 0; v < n; ++v) {
        std::vector<int> ring;
        for (int i = 0; i < g.degree(v); ++i) ring.push_back(offset[v] + i);
        faces.push_back(ring);
    }
    for (const Face& face : emb.faces) {
        std::vector<int> walk;
        int len = face.length();
        for (int i = 0; i < len; ++i) {
            int v = face.vertices[(i + 1) % len]; // head of edge i, tail of edge i+1
            walk.push_back(corner(v, face.edges[i]));
            walk.push_back(corner(v, face.edges[(i + 1) % len]));
        }
        faces.push_back(walk);
    }
    return embedded_from_faces(edges, offset[n], faces);
}

/// Stacked (Apollonian) triangulation: repeatedly subdivide a randomly
/// chosen face of K4 into three by a new vertex. Deterministic per seed.
inline EmbeddedGraph apollonian_triangulation(int stacks, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<int>> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    int next = 4;
    for (int s = 0; s < stacks; ++s) {
        std::size_t pick = rng() % faces.size();
        std::vector<int> face = faces[pick];
        faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(pick));
        int a = face[0], b = face[1], c = face[2], v = next++;
        for (int x : face) edges.push_back({std::min(x, v), std::max(x, v)});
        faces.push_back({a, b, v});
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }
    return embedded_from_faces(edges, next, faces);
}

/// Seeded chordal graph growth: attach each new vertex to a random subset
/// (at least min_attach vertices) of a random maximal clique.
inline Graph random_chordal(int n, std::uint32_t seed, int min_attach = 1) {
    if (n < 3) fail(ErrorKind::ConsistencyError, "chordal generator needs n >= 3");
    std::mt19937 rng(seed);
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
    for (int v = 3; v < n; ++v) {
        Graph g = build_graph(edges, v);
        std::vector<std::vector<int>> cliques = maximal_cliques(g);
        const std::vector<int>& clique = cliques[rng() % cliques.size()];
        int take_min = std::min<int>(min_attach, static_cast<int>(clique.size()));
        int take = take_min + static_cast<int>(rng() % (clique.size() - take_min + 1));
        std::vector<int> perm = clique;
        for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i)
            std::swap(perm[i], perm[rng() % (i + 1)]);
        for (int i = 0; i < take; ++i) edges.push_back({perm[i], v});
    }
    return build_graph(edges, n);
}

/// As random_chordal but guaranteed 2-connected: attach to >= 2 clique
/// vertices, then double-check with the block decomposition.
inline Graph random_two_connected_chordal(int n, std::uint32_t seed) {
    Graph g = random_chordal(n, seed, 2);
    if (!is_two_connected(g))
        fail(ErrorKind::ConsistencyError, "generator produced a graph with a cut vertex");
    return g;
}

/// Every connected simple graph on exactly n labeled vertices whose edge
/// bitmask is congruent to shard modulo shard_count; fn receives each one.
/// Shards partition the full enumeration, so independent workers can split
/// the 2^(n choose 2) masks without coordination.
template <typename F>
inline void for_each_connected_graph_shard(int n, std::uint64_t shard, std::uint64_t shard_count,
                                           F&& fn) {
    std::vector<Edge> all_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_pairs.push_back({i, j});
    int k = static_cast<int>(all_pairs.size());
    for (std::uint64_t mask = shard; mask < (std::uint64_t{1} << k); mask += shard_count) {
        // quick connectivity probe before building
        DisjointSets sets(n);
        int united = 1;
        for (int b = 0; b < k; ++b)
            if (mask >> b & 1)
                if (sets.unite(all_pairs[b].first, all_pairs[b].second)) ++united;
        if (united != n) continue;
        std::vector<Edge> edges;
        for (int b = 0; b < k; ++b)
            if (mask >> b & 1) edges.push_back(all_pairs[b]);
        fn(build_graph(edges, n));
    }
}

/// Every connected simple graph on exactly n labeled vertices, by edge
/// bitmask; fn receives each one. 2^(n choose 2) masks, so n <= 7 in
/// practice.
template <typename F>
inline void for_each_connected_graph(int n, F&& fn) {
    for_each_connected_graph_shard(n, 0, 1, std::forward<F>(fn));
}

} // namespace thetalab
