#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "thetalab/thetalab.hpp"

using namespace thetalab;

namespace {

Graph diamond() { return build_graph({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

// Independently enumerates the opposite-edge pairs of all isometric 6-cycles
// of S(G), the relation subdivision_phi_relation computes from triangles.
std::vector<std::pair<int, int>> brute_opposite_pairs(const Graph& g) {
    SubdividedGraph s = subdivide(g);
    DistanceMatrix dm = all_pairs_distances(s.graph);
    std::set<std::vector<int>> seen;
    std::set<std::pair<int, int>> pairs;
    for (int e = 0; e < s.graph.edge_count(); ++e)
        for (const CycleSubgraph& cyc : cycles_through_edge(s.graph, dm, e, 6)) {
            if (cyc.length() != 6 || !is_isometric_cycle(s.graph, dm, cyc)) continue;
            std::vector<int> key = cyc.edge_ids;
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            for (int i = 0; i < 3; ++i) {
                int a = cyc.edge_ids[i], b = cyc.edge_ids[i + 3];
                pairs.insert({std::min(a, b), std::max(a, b)});
            }
        }
    return {pairs.begin(), pairs.end()};
}

} // namespace

TEST_CASE("chordality recognition with verifiable witnesses") {
    SECTION("chordal yes-instances come with a perfect elimination order") {
        for (const Graph& g : {complete_graph(5), diamond(), path_graph(6),
                               random_two_connected_chordal(11, 7u)}) {
            ChordalityResult res = is_chordal(g);
            REQUIRE(res.chordal);
            REQUIRE(res.elimination.order.size() == static_cast<std::size_t>(g.vertex_count()));
            // re-verify the defining property: later neighborhoods are cliques
            std::vector<int> position(g.vertex_count());
            for (std::size_t i = 0; i < res.elimination.order.size(); ++i)
                position[res.elimination.order[i]] = static_cast<int>(i);
            for (int v = 0; v < g.vertex_count(); ++v) {
                std::vector<int> later;
                for (auto [w, e] : g.adj[v]) {
                    (void)e;
                    if (position[w] > position[v]) later.push_back(w);
                }
                std::sort(later.begin(), later.end());
                std::vector<int> recorded = res.elimination.later_neighbors[v];
                std::sort(recorded.begin(), recorded.end());
                REQUIRE(later == recorded);
                for (std::size_t i = 0; i < later.size(); ++i)
                    for (std::size_t j = i + 1; j < later.size(); ++j)
                        REQUIRE(g.has_edge(std::min(later[i], later[j]),
                                           std::max(later[i], later[j])));
            }
        }
    }
    SECTION("no-instances come with a chordless cycle") {
        for (const Graph& g : {cycle_graph(4), cycle_graph(6), hypercube_graph(3)}) {
            ChordalityResult res = is_chordal(g);
            REQUIRE_FALSE(res.chordal);
            const auto& cyc = res.chordless_cycle;
            REQUIRE(cyc.size() >= 4);
            std::set<int> distinct(cyc.begin(), cyc.end());
            REQUIRE(distinct.size() == cyc.size());
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
                REQUIRE(g.has_edge(std::min(u, v), std::max(u, v)));
            }
            // no chords: non-consecutive vertices are non-adjacent
            for (std::size_t i = 0; i < cyc.size(); ++i)
                for (std::size_t j = i + 2; j < cyc.size(); ++j) {
                    if (i == 0 && j + 1 == cyc.size()) continue;
                    REQUIRE_FALSE(g.has_edge(std::min(cyc[i], cyc[j]),
                                             std::max(cyc[i], cyc[j])));
                }
        }
    }
}

TEST_CASE("maximal cliques of chordal graphs") {
    SECTION("known small censuses") {
        REQUIRE(maximal_cliques(complete_graph(4)) ==
                std::vector<std::vector<int>>{{0, 1, 2, 3}});
        auto diamond_cliques = maximal_cliques(diamond());
        REQUIRE(diamond_cliques.size() == 2);
        for (auto& c : diamond_cliques) std::sort(c.begin(), c.end());
        std::sort(diamond_cliques.begin(), diamond_cliques.end());
        REQUIRE(diamond_cliques == std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}});
    }
    SECTION("clique properties on a seeded instance") {
        Graph g = random_two_connected_chordal(12, 5u);
        auto cliques = maximal_cliques(g);
        std::set<std::pair<int, int>> covered;
        for (const auto& c : cliques) {
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    int u = std::min(c[i], c[j]), v = std::max(c[i], c[j]);
                    REQUIRE(g.has_edge(u, v)); // really a clique
                    covered.insert({u, v});
                }
            // maximal: every outside vertex misses some member
            std::set<int> inside(c.begin(), c.end());
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (inside.count(v)) continue;
                bool dominates = true;
                for (int u : c)
                    if (!g.has_edge(std::min(u, v), std::max(u, v))) dominates = false;
                REQUIRE_FALSE(dominates);
            }
        }
        REQUIRE(static_cast<int>(covered.size()) == g.edge_count());
    }
}

TEST_CASE("exposed edges and the residual components") {
    SECTION("diamond: four exposed edges, three residual components") {
        Graph g = diamond();
        ExposedEdgeReport rep = exposed_edges(g);
        REQUIRE(rep.exposed_edges == std::vector<int>{0, 1, 3, 4});
        REQUIRE(rep.component_count == 3);
        REQUIRE(rep.component_of == std::vector<int>{0, 1, 1, 2});
    }
    SECTION("K4: a single maximal clique exposes everything") {
        ExposedEdgeReport rep = exposed_edges(complete_graph(4));
        REQUIRE(rep.exposed_edges.size() == 6);
        REQUIRE(rep.component_count == 4); // residual graph is edgeless
    }
    SECTION("an edge that IS its maximal clique is not exposed") {
        // path 0-1-2: both edges are maximal cliques of size 2
        ExposedEdgeReport rep = exposed_edges(path_graph(3));
        REQUIRE(rep.exposed_edges.empty());
        REQUIRE(rep.component_count == 1);
    }
}

TEST_CASE("chordal subdivision partition prediction") {
    SECTION("diamond: the pinned three-class coloring") {
        Graph g = diamond();
        EdgePartition predicted = expected_chordal_partition(g);
        REQUIRE(predicted.classes ==
                std::vector<std::vector<int>>{{0, 2, 4, 5, 7, 9}, {1, 3}, {6, 8}});
        CheckReport rep = chordal_subdivision_check(g);
        INFO(rep.witness);
        REQUIRE(rep.ok);
    }
    SECTION("complete graphs: one class per vertex") {
        for (int n = 4; n <= 6; ++n) {
            Graph g = complete_graph(n);
            CheckReport rep = chordal_subdivision_check(g);
            INFO(rep.witness);
            REQUIRE(rep.ok);
            REQUIRE(expected_chordal_partition(g).class_count() == n);
        }
    }
    SECTION("seeded 2-connected instances pass the full cross-check") {
        for (std::uint32_t seed : {11u, 12u, 13u}) {
            Graph g = random_two_connected_chordal(10, seed);
            CheckReport rep = chordal_subdivision_check(g);
            INFO(rep.witness);
            REQUIRE(rep.ok);
        }
    }
    SECTION("preconditions are enforced") {
        REQUIRE(error_kind_of([] { expected_chordal_partition(cycle_graph(5)); }) ==
                ErrorKind::NotChordal);
        // two triangles sharing a cut vertex: chordal but not 2-connected
        Graph bowtie = build_graph({{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
        REQUIRE(error_kind_of([&] { expected_chordal_partition(bowtie); }) ==
                ErrorKind::Not2Connected);
        REQUIRE(error_kind_of([] { chordal_subdivision_check(path_graph(3)); }) ==
                ErrorKind::Not2Connected);
    }
}

TEST_CASE("opposite-edge relation on subdivided triangles") {
    SECTION("matches the brute-force isometric 6-cycle enumeration") {
        for (const Graph& g : {diamond(), complete_graph(4), complete_graph(5),
                               random_two_connected_chordal(9, 11u)}) {
            SubdividedGraph s = subdivide(g);
            EdgeRelationPairs rel = subdivision_phi_relation(g, s.map);
            REQUIRE(rel.pairs == brute_opposite_pairs(g));
        }
    }
    SECTION("diamond: the six pairs and their four-class closure, pinned") {
        Graph g = diamond();
        SubdividedGraph s = subdivide(g);
        EdgeRelationPairs rel = subdivision_phi_relation(g, s.map);
        REQUIRE(rel.pairs == std::vector<std::pair<int, int>>{
                                 {0, 5}, {1, 3}, {2, 4}, {4, 9}, {5, 7}, {6, 8}});
        EdgePartition closure = closure_partition(s.graph.edge_count(), rel);
        REQUIRE(closure.classes == std::vector<std::vector<int>>{
                                       {0, 5, 7}, {1, 3}, {2, 4, 9}, {6, 8}});
    }
}

TEST_CASE("opposite-pair closure vs full closure on the subdivision") {
    SECTION("complete graphs: the two closures coincide") {
        for (int n = 3; n <= 5; ++n) {
            OppositeClosureReport rep = chordal_opposite_closure_check(complete_graph(n));
            REQUIRE(rep.refines);
            REQUIRE(rep.equal);
            REQUIRE(rep.opposite_classes == n);
            REQUIRE(rep.theta_classes == n);
        }
    }
    SECTION("diamond: strict refinement, equality fails") {
        OppositeClosureReport rep = chordal_opposite_closure_check(diamond());
        REQUIRE(rep.refines);
        REQUIRE_FALSE(rep.equal);
        REQUIRE(rep.order == PartitionOrder::P1RefinesP2);
        REQUIRE(rep.opposite_classes == 4);
        REQUIRE(rep.theta_classes == 3);
    }
    SECTION("refinement holds on every seeded instance") {
        for (std::uint32_t seed : {3u, 4u, 5u, 6u}) {
            OppositeClosureReport rep =
                chordal_opposite_closure_check(random_two_connected_chordal(11, seed));
            REQUIRE(rep.refines);
        }
    }
    SECTION("non-chordal graphs are refused") {
        REQUIRE(error_kind_of([] { chordal_opposite_closure_check(cycle_graph(6)); }) ==
                ErrorKind::NotChordal);
    }
}
