#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "thetalab/check.hpp"
#include "thetalab/distance.hpp"
#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/isometric_cycles.hpp"
#include "thetalab/partition.hpp"
#include "thetalab/relations.hpp"
#include "thetalab/subdivision.hpp"

namespace thetalab {

struct Face {
    std::vector<int> vertices; // facial walk; edges[i] joins vertices[i], vertices[i+1 mod L]
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

struct PlanarEmbedding {
    std::vector<std::vector<int>> rotation; // per vertex, incident edge ids in cyclic order
    std::vector<Face> faces;
};

/// Walks facial boundaries of the embedding given by per-vertex cyclic
/// neighbor orders: after arriving at v from u, leave along the neighbor
/// following u in v's rotation. Euler's formula gates acceptance.
inline PlanarEmbedding trace_faces(const Graph& g,
                                   const std::vector<std::vector<int>>& neighbor_rotation) {
    int n = g.vertex_count();
    int m = g.edge_count();
    if (static_cast<int>(neighbor_rotation.size()) != n)
        fail(ErrorKind::ConsistencyError, "rotation has " +
                                              std::to_string(neighbor_rotation.size()) +
                                              " rows for " + std::to_string(n) + " vertices");

    PlanarEmbedding emb;
    emb.rotation.resize(n);
    // pos_of[v] maps neighbor -> position in v's rotation, as sorted pairs.
    std::vector<std::vector<std::pair<int, int>>> pos_of(n);
    for (int v = 0; v < n; ++v) {
        const auto& rot = neighbor_rotation[v];
        if (rot.size() != g.adj[v].size())
            fail(ErrorKind::ConsistencyError,
                 "vertex " + std::to_string(v) + " rotation lists " +
                     std::to_string(rot.size()) + " neighbors, degree is " +
                     std::to_string(g.adj[v].size()));
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
            int eid = g.edge_id(std::min(v, rot[i]), std::max(v, rot[i]));
            if (eid < 0)
                fail(ErrorKind::ConsistencyError,
                     "rotation of vertex " + std::to_string(v) + " names non-neighbor " +
                         std::to_string(rot[i]));
            emb.rotation[v].push_back(eid);
            pos_of[v].push_back({rot[i], i});
        }
        std::sort(pos_of[v].begin(), pos_of[v].end());
        for (std::size_t i = 1; i < pos_of[v].size(); ++i)
            if (pos_of[v][i].first == pos_of[v][i - 1].first)
                fail(ErrorKind::ConsistencyError, "rotation of vertex " + std::to_string(v) +
                                                      " repeats neighbor " +
                                                      std::to_string(pos_of[v][i].first));
    }

    auto position = [&](int v, int u) {
        auto it = std::lower_bound(pos_of[v].begin(), pos_of[v].end(), std::make_pair(u, -1));
        return it->second;
    };
    auto directed_index = [&](int u, int v) {
        int e = g.edge_id(std::min(u, v), std::max(u, v));
        return 2 * e + (u < v ? 0 : 1);
    };

    std::vector<char> used(2 * m, 0);
    for (int e = 0; e < m; ++e) {
        for (int dir = 0; dir < 2; ++dir) {
            if (used[2 * e + dir]) continue;
            int u = dir == 0 ? g.edge(e).first : g.edge(e).second;
            int v = g.other_endpoint(e, u);
            Face face;
            int cu = u, cv = v;
            while (true) {
                used[directed_index(cu, cv)] = 1;
                face.vertices.push_back(cu);
                face.edges.push_back(g.edge_id(std::min(cu, cv), std::max(cu, cv)));
                const auto& rot = neighbor_rotation[cv];
                int next = rot[(position(cv, cu) + 1) % rot.size()];
                cu = cv;
                cv = next;
                if (cu == u && cv == v) break;
            }
            emb.faces.push_back(std::move(face));
        }
    }

    int f = static_cast<int>(emb.faces.size());
    if (n - m + f != 2)
        fail(ErrorKind::EulerViolation, "n - m + f = " + std::to_string(n) + " - " +
                                            std::to_string(m) + " + " + std::to_string(f) +
                                            " != 2");
    return emb;
}

struct FullereneCheck {
    bool accepted = false;
    bool is_cubic = false;
    std::vector<int> face_lengths; // ascending
    int pentagon_count = 0;
    int hexagon_count = 0;
};

inline FullereneCheck validate_fullerene(const Graph& g, const PlanarEmbedding& emb) {
    FullereneCheck check;
    check.is_cubic = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) check.is_cubic = false;
    bool faces_ok = true;
    for (const Face& face : emb.faces) {
        check.face_lengths.push_back(face.length());
        if (face.length() == 5)
            ++check.pentagon_count;
        else if (face.length() == 6)
            ++check.hexagon_count;
        else
            faces_ok = false;
    }
    std::sort(check.face_lengths.begin(), check.face_lengths.end());
    check.accepted = check.is_cubic && faces_ok;
    if (check.accepted && check.pentagon_count != 12)
        fail(ErrorKind::ConsistencyError,
             "cubic all-5/6 embedding with " + std::to_string(check.pentagon_count) +
                 " pentagons; Euler's formula forces 12");
    return check;
}

namespace detail {

inline void require_fullerene(const Graph& g, const PlanarEmbedding& emb) {
    if (!validate_fullerene(g, emb).accepted)
        fail(ErrorKind::NotFullerene, "graph is not a cubic planar all-5/6-face graph");
}

inline void add_pair(std::vector<std::pair<int, int>>& pairs, int e, int f) {
    pairs.emplace_back(std::min(e, f), std::max(e, f));
}

} // namespace detail

/// Opposite edges of each hexagonal face.
inline EdgeRelationPairs phi_relation(const Graph& g, const PlanarEmbedding& emb) {
    detail::require_fullerene(g, emb);
    EdgeRelationPairs rel;
    for (const Face& face : emb.faces) {
        if (face.length() != 6) continue;
        for (int i = 0; i < 3; ++i) detail::add_pair(rel.pairs, face.edges[i], face.edges[i + 3]);
    }
    std::sort(rel.pairs.begin(), rel.pairs.end());
    rel.pairs.erase(std::unique(rel.pairs.begin(), rel.pairs.end()), rel.pairs.end());
    return rel;
}

/// Phi plus the non-incident edge pairs of each pentagonal face.
inline EdgeRelationPairs phi_bar_relation(const Graph& g, const PlanarEmbedding& emb) {
    EdgeRelationPairs rel = phi_relation(g, emb);
    for (const Face& face : emb.faces) {
        if (face.length() != 5) continue;
        for (int i = 0; i < 5; ++i) {
            detail::add_pair(rel.pairs, face.edges[i], face.edges[(i + 2) % 5]);
        }
    }
    std::sort(rel.pairs.begin(), rel.pairs.end());
    rel.pairs.erase(std::unique(rel.pairs.begin(), rel.pairs.end()), rel.pairs.end());
    return rel;
}

/// Connected component of the phi graph; in a fullerene each edge has at
/// most two phi partners, so components are paths (singletons included) or
/// cycles.
struct Railroad {
    std::vector<int> edges; // ascending
    bool is_cycle = false;
};

inline std::vector<Railroad> railroads(const Graph& g, const PlanarEmbedding& emb) {
    EdgeRelationPairs phi = phi_relation(g, emb);
    int m = g.edge_count();
    std::vector<std::vector<int>> partners(m);
    for (auto [e, f] : phi.pairs) {
        partners[e].push_back(f);
        partners[f].push_back(e);
    }
    for (int e = 0; e < m; ++e)
        if (partners[e].size() > 2)
            fail(ErrorKind::ConsistencyError,
                 "edge " + std::to_string(e) + " has " + std::to_string(partners[e].size()) +
                     " phi partners; at most 2 possible in a fullerene");
    std::vector<Railroad> out;
    std::vector<char> seen(m, 0);
    for (int start = 0; start < m; ++start) {
        if (seen[start]) continue;
        Railroad r;
        std::vector<int> queue = {start};
        seen[start] = 1;
        bool all_two = true;
        while (!queue.empty()) {
            int e = queue.back();
            queue.pop_back();
            r.edges.push_back(e);
            if (partners[e].size() != 2) all_two = false;
            for (int f : partners[e])
                if (!seen[f]) {
                    seen[f] = 1;
                    queue.push_back(f);
                }
        }
        std::sort(r.edges.begin(), r.edges.end());
        r.is_cycle = all_two;
        out.push_back(std::move(r));
    }
    return out;
}

struct SeparatingCycleReport {
    bool ok = true;
    std::int64_t cycles_checked = 0;
    int separating_nine = 0;
    std::string witness;
};

/// Scans all simple cycles up to max_len: short cycles must not separate the
/// graph, and every separating 9-cycle must cut off exactly one vertex all of
/// whose faces are pentagons.
inline SeparatingCycleReport separating_cycle_scan(const Graph& g, const PlanarEmbedding& emb,
                                                   int max_len = 9) {
    detail::require_fullerene(g, emb);
    DistanceMatrix dm = all_pairs_distances(g);
    int n = g.vertex_count();

    std::vector<std::vector<int>> faces_at(n);
    for (int fi = 0; fi < static_cast<int>(emb.faces.size()); ++fi)
        for (int v : emb.faces[fi].vertices) faces_at[v].push_back(fi);

    SeparatingCycleReport rep;
    for (int e = 0; e < g.edge_count() && rep.ok; ++e) {
        for (const CycleSubgraph& cyc : cycles_through_edge(g, dm, e, max_len)) {
            if (*std::min_element(cyc.edge_ids.begin(), cyc.edge_ids.end()) != e)
                continue; // counted once, at its smallest edge
            ++rep.cycles_checked;
            std::vector<char> removed(n, 0);
            for (int v : cyc.vertices) removed[v] = 1;
            std::vector<int> comp(n, -1);
            int comps = 0;
            std::vector<int> singleton_roots;
            for (int s = 0; s < n; ++s) {
                if (removed[s] || comp[s] != -1) continue;
                int size = 0;
                std::vector<int> queue = {s};
                comp[s] = comps;
                while (!queue.empty()) {
                    int v = queue.back();
                    queue.pop_back();
                    ++size;
                    for (auto [w, id] : g.adj[v]) {
                        (void)id;
                        if (removed[w] || comp[w] != -1) continue;
                        comp[w] = comps;
                        queue.push_back(w);
                    }
                }
                if (size == 1) singleton_roots.push_back(s);
                ++comps;
            }
            if (comps < 2) continue;
            if (cyc.length() <= 8) {
                rep.ok = false;
                rep.witness = "separating cycle of length " + std::to_string(cyc.length()) +
                              " through edge " + std::to_string(e);
                break;
            }
            if (cyc.length() == 9) {
                ++rep.separating_nine;
                bool shape_ok = comps == 2 && singleton_roots.size() == 1;
                if (shape_ok) {
                    int x = singleton_roots.front();
                    for (int fi : faces_at[x])
                        if (emb.faces[fi].length() != 5) shape_ok = false;
                    if (faces_at[x].size() != 3) shape_ok = false;
                }
                if (!shape_ok) {
                    rep.ok = false;
                    rep.witness =
                        "separating 9-cycle does not isolate one triple-pentagon vertex";
                    break;
                }
            }
        }
    }
    return rep;
}

/// On a fullerene the subdivided closure never splits an edge's halves: both
/// partitions coincide.
inline SubdivisionEquality fullerene_subdivision_check(const Graph& g,
                                                       const PlanarEmbedding& emb) {
    detail::require_fullerene(g, emb);
    return subdivision_equality(g);
}

struct PhiBarReport {
    bool refines = false;
    bool equal = false;
    int phi_bar_classes = 0;
    int theta_classes = 0;
};

/// The closure of phi-bar sits below the closure of the distance relation;
/// whether they coincide varies by instance, so the flag is reported.
inline PhiBarReport phi_bar_refinement_check(const Graph& g, const PlanarEmbedding& emb) {
    EdgeRelationPairs phi_bar = phi_bar_relation(g, emb);
    EdgePartition phi_star = closure_partition(g.edge_count(), phi_bar);
    EdgePartition star = theta_star(g);
    PartitionOrder order = compare_partitions(phi_star, star);
    PhiBarReport rep;
    rep.refines = order == PartitionOrder::Equal || order == PartitionOrder::P1RefinesP2;
    rep.equal = order == PartitionOrder::Equal;
    rep.phi_bar_classes = phi_star.class_count();
    rep.theta_classes = star.class_count();
    return rep;
}

inline bool validate_triangulation(const Graph& g, const PlanarEmbedding& emb) {
    if (g.vertex_count() < 4) return false;
    for (const Face& face : emb.faces)
        if (face.length() != 3) return false;
    return true;
}

/// Predicted partition of S(G)'s edges for a plane triangulation: one class
/// per degree-3 vertex x holding the three far-side half-edges of x's edges,
/// and one global class for everything else (absent exactly for K4).
inline EdgePartition expected_triangulation_partition(const Graph& g,
                                                      const PlanarEmbedding& emb,
                                                      const SubdivisionMap& map) {
    if (!validate_triangulation(g, emb))
        fail(ErrorKind::NotTriangulation, "faces are not all triangles");
    std::vector<int> labels(2 * map.orig_m, -1);
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (g.degree(x) != 3) continue;
        for (auto [y, e] : g.adj[x]) labels[map.half_at(e, y)] = x;
    }
    return partition_from_labels(labels);
}

/// Cross-checks the prediction against the brute-force closure on S(G), and
/// that the closure on G itself is a single class.
inline CheckReport triangulation_subdivision_check(const Graph& g, const PlanarEmbedding& emb) {
    if (!validate_triangulation(g, emb))
        fail(ErrorKind::NotTriangulation, "faces are not all triangles");
    CheckReport rep;
    EdgePartition star_g = theta_star(g);
    ++rep.checked;
    if (star_g.class_count() != 1) {
        rep.fail_with("closure on G has " + std::to_string(star_g.class_count()) +
                      " classes, expected 1");
        return rep;
    }
    SubdividedGraph s = subdivide(g);
    EdgePartition predicted = expected_triangulation_partition(g, emb, s.map);
    EdgePartition star_s = theta_star(s.graph);
    ++rep.checked;
    if (compare_partitions(predicted, star_s) != PartitionOrder::Equal)
        rep.fail_with("predicted partition (" + std::to_string(predicted.class_count()) +
                      " classes) differs from computed one (" +
                      std::to_string(star_s.class_count()) + " classes)");
    return rep;
}

} // namespace thetalab
