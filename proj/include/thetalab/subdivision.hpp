#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thetalab/check.hpp"
#include "thetalab/distance.hpp"
#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/partition.hpp"
#include "thetalab/relations.hpp"

namespace thetalab {

/// Names the parts of S(G): original vertex v keeps id v, the midpoint of
/// edge j gets id n+j, and edge j splits into half-edges 2j (at its smaller
/// endpoint) and 2j+1 (at its larger endpoint).
struct SubdivisionMap {
    int orig_n = 0;
    int orig_m = 0;
    std::vector<int> orig_vertex_to_sub;
    std::vector<int> orig_edge_to_sub;
    std::vector<std::pair<int, int>> sub_edge_to_half; // sub edge -> (orig edge, orig endpoint)

    std::pair<int, int> half_edge_ids(int e) const { return {2 * e, 2 * e + 1}; }

    // Half-edge of e incident to original vertex v (v must be an endpoint).
    int half_at(int e, int v) const {
        if (sub_edge_to_half[2 * e].second == v) return 2 * e;
        if (sub_edge_to_half[2 * e + 1].second == v) return 2 * e + 1;
        fail(ErrorKind::ConsistencyError,
             "vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(e));
    }
};

struct SubdividedGraph {
    Graph graph;
    SubdivisionMap map;
};

inline SubdividedGraph subdivide(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    std::vector<Edge> sub_edges;
    sub_edges.reserve(2 * m);
    SubdivisionMap map;
    map.orig_n = n;
    map.orig_m = m;
    map.orig_vertex_to_sub.resize(n);
    map.orig_edge_to_sub.resize(m);
    map.sub_edge_to_half.reserve(2 * m);
    for (int v = 0; v < n; ++v) map.orig_vertex_to_sub[v] = v;
    for (int j = 0; j < m; ++j) {
        auto [u, v] = g.edge(j);
        map.orig_edge_to_sub[j] = n + j;
        sub_edges.push_back({u, n + j});
        sub_edges.push_back({v, n + j});
        map.sub_edge_to_half.push_back({j, u});
        map.sub_edge_to_half.push_back({j, v});
    }
    return {build_graph(sub_edges, n + m), std::move(map)};
}

/// Distances in S(G) against G: vertex pairs double, vertex-to-midpoint is
/// 2d+1, midpoint-to-midpoint is 2d+2 for distinct edges (0 for equal ones).
inline CheckReport check_distance_formulas(const Graph& g, const SubdividedGraph& s,
                                           const DistanceMatrix& dm_g,
                                           const DistanceMatrix& dm_s) {
    CheckReport rep;
    int n = g.vertex_count();
    int m = g.edge_count();
    for (int x = 0; x < n && rep.ok; ++x)
        for (int y = x + 1; y < n; ++y) {
            ++rep.checked;
            if (dm_s.at(x, y) != 2 * dm_g.at(x, y)) {
                rep.fail_with("vertex pair (" + std::to_string(x) + "," + std::to_string(y) +
                              "): subdivided distance " + std::to_string(dm_s.at(x, y)) +
                              " != 2*" + std::to_string(dm_g.at(x, y)));
                break;
            }
        }
    for (int x = 0; x < n && rep.ok; ++x)
        for (int f = 0; f < m; ++f) {
            ++rep.checked;
            int want = 2 * vertex_edge_distance(dm_g, x, g.edge(f)) + 1;
            if (dm_s.at(x, s.map.orig_edge_to_sub[f]) != want) {
                rep.fail_with("vertex " + std::to_string(x) + " to midpoint of edge " +
                              std::to_string(f) + ": got " +
                              std::to_string(dm_s.at(x, s.map.orig_edge_to_sub[f])) +
                              ", expected " + std::to_string(want));
                break;
            }
        }
    for (int e = 0; e < m && rep.ok; ++e)
        for (int f = e; f < m; ++f) {
            ++rep.checked;
            int got = dm_s.at(s.map.orig_edge_to_sub[e], s.map.orig_edge_to_sub[f]);
            int want = (e == f) ? 0 : 2 * edge_edge_distance(dm_g, g.edge(e), g.edge(f)) + 2;
            if (got != want) {
                rep.fail_with("midpoints of edges " + std::to_string(e) + "," +
                              std::to_string(f) + ": got " + std::to_string(got) +
                              ", expected " + std::to_string(want));
                break;
            }
        }
    return rep;
}

inline CheckReport check_distance_formulas(const Graph& g, const SubdividedGraph& s) {
    return check_distance_formulas(g, s, all_pairs_distances(g), all_pairs_distances(s.graph));
}

/// Partition of S(G)'s edges obtained by putting both half-edges of every
/// original edge into that edge's class.
struct LiftedPartition {
    EdgePartition partition;
};

inline LiftedPartition lift_partition(const Graph& g, const EdgePartition& part,
                                      const SubdivisionMap& map) {
    if (part.ground_size() != g.edge_count() || g.edge_count() != map.orig_m)
        fail(ErrorKind::GroundSetMismatch,
             "partition covers " + std::to_string(part.ground_size()) + " edges, graph has " +
                 std::to_string(g.edge_count()));
    std::vector<int> labels(2 * map.orig_m);
    for (int e = 0; e < map.orig_m; ++e) {
        labels[2 * e] = part.class_of[e];
        labels[2 * e + 1] = part.class_of[e];
    }
    return {partition_from_labels(labels)};
}

/// Relation classes downstairs bound the classes upstairs: the subdivided
/// closure refines the lifted closure, and every directly related half-edge
/// pair comes from related (or equal) original edges.
inline CheckReport project_check(const Graph& g, const SubdividedGraph& s,
                                 const DistanceMatrix& dm_g, const DistanceMatrix& dm_s) {
    CheckReport rep;
    EdgeRelationPairs theta_s = theta_pairs(s.graph, dm_s);
    for (auto [k, l] : theta_s.pairs) {
        int e = s.map.sub_edge_to_half[k].first;
        int f = s.map.sub_edge_to_half[l].first;
        ++rep.checked;
        if (e != f && !theta_related(dm_g, g.edge(e), g.edge(f))) {
            rep.fail_with("half-edges " + std::to_string(k) + "," + std::to_string(l) +
                          " related upstairs but edges " + std::to_string(e) + "," +
                          std::to_string(f) + " unrelated downstairs");
            return rep;
        }
    }
    EdgePartition star_s = closure_partition(s.graph.edge_count(), theta_s);
    LiftedPartition lifted = lift_partition(g, theta_star(g, dm_g), s.map);
    PartitionOrder order = compare_partitions(star_s, lifted.partition);
    ++rep.checked;
    if (order != PartitionOrder::Equal && order != PartitionOrder::P1RefinesP2)
        rep.fail_with(std::string("subdivided closure does not refine the lift: ") +
                      to_string(order));
    return rep;
}

inline CheckReport project_check(const Graph& g, const SubdividedGraph& s) {
    return project_check(g, s, all_pairs_distances(g), all_pairs_distances(s.graph));
}

/// Every related edge pair downstairs is witnessed upstairs by at least one
/// related half-edge pair, and by two disjoint ones when G is bipartite.
inline CheckReport converse_pairs_check(const Graph& g, const SubdividedGraph& s,
                                        const DistanceMatrix& dm_g,
                                        const DistanceMatrix& dm_s) {
    CheckReport rep;
    bool bip = is_bipartite(g).bipartite;
    EdgeRelationPairs theta_g = theta_pairs(g, dm_g);
    for (auto [e, f] : theta_g.pairs) {
        ++rep.checked;
        bool rel[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                rel[i][j] = theta_related(dm_s, s.graph.edge(2 * e + i), s.graph.edge(2 * f + j));
        bool any = rel[0][0] || rel[0][1] || rel[1][0] || rel[1][1];
        if (!any) {
            rep.fail_with("no half-edge pair related for edge pair (" + std::to_string(e) + "," +
                          std::to_string(f) + ")");
            return rep;
        }
        if (bip && !((rel[0][0] && rel[1][1]) || (rel[0][1] && rel[1][0]))) {
            rep.fail_with("bipartite graph lacks two disjoint half-edge pairs for (" +
                          std::to_string(e) + "," + std::to_string(f) + ")");
            return rep;
        }
    }
    return rep;
}

inline CheckReport converse_pairs_check(const Graph& g, const SubdividedGraph& s) {
    return converse_pairs_check(g, s, all_pairs_distances(g), all_pairs_distances(s.graph));
}

/// True iff both half-edges of original edge e fell into one class of the
/// given partition of S(G)'s edges.
inline bool halfedges_merged(const EdgePartition& sg_partition, const SubdivisionMap& map,
                             int e) {
    if (e < 0 || e >= map.orig_m)
        fail(ErrorKind::ConsistencyError, "edge id " + std::to_string(e) + " out of range");
    if (sg_partition.ground_size() != 2 * map.orig_m)
        fail(ErrorKind::GroundSetMismatch, "partition is not over the subdivided edge set");
    return sg_partition.class_of[2 * e] == sg_partition.class_of[2 * e + 1];
}

struct SubdivisionEquality {
    PartitionOrder order = PartitionOrder::Incomparable;
    bool equal = false;
    int sub_classes = 0;
    int lift_classes = 0;
};

/// Compares the closure computed on S(G) against the lift of the closure
/// computed on G. The subdivided closure always refines the lift; whether
/// they coincide is the structural question the graph families answer.
inline SubdivisionEquality subdivision_equality(const Graph& g) {
    SubdividedGraph s = subdivide(g);
    EdgePartition star_s = theta_star(s.graph);
    LiftedPartition lifted = lift_partition(g, theta_star(g), s.map);
    SubdivisionEquality out;
    out.order = compare_partitions(star_s, lifted.partition);
    out.equal = out.order == PartitionOrder::Equal;
    out.sub_classes = star_s.class_count();
    out.lift_classes = lifted.partition.class_count();
    return out;
}

} // namespace thetalab
