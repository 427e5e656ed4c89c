// Generates the bundled graph fixtures under data/. Every construction is
// validated before it is written (embeddings must trace to a sphere, the
// cubic graphs must pass the fullerene gate, the triangulations and chordal
// samples must pass theirs), so a bad construction aborts instead of
// producing a silently wrong fixture.

#include <filesystem>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "thetalab/thetalab.hpp"

namespace {

using namespace thetalab;

std::filesystem::path out_dir;

void write_fixture(const std::string& name, const Graph& g,
                   const std::vector<std::vector<int>>* rotation = nullptr) {
    std::filesystem::path path = out_dir / (name + ".graph");
    save_graph_file(path.string(), g, rotation);
    // Round-trip gate: the file must parse back to the identical structure.
    ParsedGraphFile back = load_graph_file(path.string());
    if (back.graph.edges != g.edges || back.has_rotation != (rotation != nullptr) ||
        (rotation && back.rotation != *rotation))
        fail(ErrorKind::ConsistencyError, name + ": round trip changed the graph");
    std::cout << name << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges"
              << (rotation ? ", rotation" : "") << "\n";
}

void write_fullerene(const std::string& name, const EmbeddedGraph& eg) {
    PlanarEmbedding emb = trace_faces(eg.graph, eg.rotation);
    FullereneCheck check = validate_fullerene(eg.graph, emb);
    if (!check.accepted)
        fail(ErrorKind::NotFullerene,
             name + ": pentagons=" + std::to_string(check.pentagon_count) +
                 " hexagons=" + std::to_string(check.hexagon_count));
    write_fixture(name, eg.graph, &eg.rotation);
}

void write_triangulation(const std::string& name, const EmbeddedGraph& eg) {
    PlanarEmbedding emb = trace_faces(eg.graph, eg.rotation);
    if (!validate_triangulation(eg.graph, emb))
        fail(ErrorKind::NotTriangulation, name + ": non-triangular face");
    write_fixture(name, eg.graph, &eg.rotation);
}

// Barrel fullerene: two hexagonal cap faces joined by a ring of twelve
// vertices, twelve pentagons around the waist.
EmbeddedGraph barrel_c24() {
    auto T = [](int i) { return i % 6; };
    auto B = [](int i) { return 6 + i % 6; };
    auto R = [](int j) { return 12 + ((j % 12) + 12) % 12; };
    std::vector<Edge> edges;
    for (int i = 0; i < 6; ++i) {
        edges.push_back({std::min(T(i), T(i + 1)), std::max(T(i), T(i + 1))});
        edges.push_back({std::min(B(i), B(i + 1)), std::max(B(i), B(i + 1))});
        edges.push_back({T(i), R(2 * i)});
        edges.push_back({B(i), R(2 * i + 1)});
    }
    for (int j = 0; j < 12; ++j)
        edges.push_back({std::min(R(j), R(j + 1)), std::max(R(j), R(j + 1))});
    std::vector<std::vector<int>> faces;
    faces.push_back({T(0), T(1), T(2), T(3), T(4), T(5)});
    faces.push_back({B(0), B(1), B(2), B(3), B(4), B(5)});
    for (int i = 0; i < 6; ++i) {
        faces.push_back({T(i), R(2 * i), R(2 * i + 1), R(2 * i + 2), T(i + 1)});
        faces.push_back({B(i), R(2 * i + 1), R(2 * i + 2), R(2 * i + 3), B(i + 1)});
    }
    return embedded_from_faces(edges, 24, faces);
}

// Two polar caps of three pentagons (apex + 9-cycle boundary) joined by
// three vertical vertex pairs; three equatorial hexagons.
EmbeddedGraph polar_c26() {
    int t = 0, s = 10;
    auto A = [](int i) { return 1 + ((i % 9) + 9) % 9; };
    auto B = [](int i) { return 11 + ((i % 9) + 9) % 9; };
    auto M = [](int i) { return 20 + i; };
    std::vector<Edge> edges;
    for (int i : {0, 3, 6}) {
        edges.push_back({t, A(i)});
        edges.push_back({s, B(i)});
    }
    for (int i = 0; i < 9; ++i) {
        edges.push_back({std::min(A(i), A(i + 1)), std::max(A(i), A(i + 1))});
        edges.push_back({std::min(B(i), B(i + 1)), std::max(B(i), B(i + 1))});
    }
    for (int p = 0; p < 3; ++p) edges.push_back({M(2 * p), M(2 * p + 1)});
    int top_link[6] = {2, 4, 5, 7, 8, 1};    // M_i - A(top_link[i])
    int bottom_link[6] = {2, 4, 5, 7, 8, 1}; // M_i - B(bottom_link[i])
    for (int i = 0; i < 6; ++i) {
        edges.push_back({std::min(M(i), A(top_link[i])), std::max(M(i), A(top_link[i]))});
        edges.push_back({std::min(M(i), B(bottom_link[i])), std::max(M(i), B(bottom_link[i]))});
    }
    std::vector<std::vector<int>> faces;
    for (int i : {0, 3, 6}) {
        faces.push_back({t, A(i), A(i + 1), A(i + 2), A(i + 3)});
        faces.push_back({s, B(i), B(i + 1), B(i + 2), B(i + 3)});
    }
    for (int p = 0; p < 3; ++p) {
        int i = 2 * p;
        faces.push_back({A(top_link[i]), A(top_link[i] + 1), A(top_link[i] + 2), M(i + 1), M(i)});
        faces.push_back(
            {B(bottom_link[i]), B(bottom_link[i] + 1), B(bottom_link[i] + 2), M(i + 1), M(i)});
    }
    faces.push_back({A(1), A(2), M(0), B(2), B(1), M(5)});
    faces.push_back({A(4), A(5), M(2), B(5), B(4), M(1)});
    faces.push_back({A(7), A(8), M(4), B(8), B(7), M(3)});
    return embedded_from_faces(edges, 26, faces);
}

// Four caps of three pentagons (apex plus a 9-cycle boundary) arranged at
// the corners of an oriented tetrahedron and glued pairwise along their free
// boundary pairs; each junction of three caps closes into a hexagon. The
// identification crosses each pair (first slot of one cap to second slot of
// the other) so the cap boundaries traverse shared segments in opposite
// directions, as an orientable gluing requires.
EmbeddedGraph tetra_c28() {
    // Cap c occupies slots 10c..10c+9: apex 10c, ring slots 10c+1..10c+9.
    auto apex = [](int c) { return 10 * c; };
    auto ring = [](int c, int i) { return 10 * c + 1 + ((i % 9) + 9) % 9; };
    // Cyclic neighbor order of each cap around the oriented tetrahedron.
    const int nbr[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    // Cap c's free boundary pair toward nbr[c][k] is (ring 3k+1, ring 3k+2).
    auto pair_toward = [&](int c, int d) {
        for (int k = 0; k < 3; ++k)
            if (nbr[c][k] == d)
                return std::pair<int, int>{ring(c, 3 * k + 1), ring(c, 3 * k + 2)};
        fail(ErrorKind::ConsistencyError, "caps are not tetrahedron neighbors");
        return std::pair<int, int>{-1, -1};
    };

    DisjointSets dsu(40);
    for (int c = 0; c < 4; ++c)
        for (int d = c + 1; d < 4; ++d) {
            auto [a1, a2] = pair_toward(c, d);
            auto [b1, b2] = pair_toward(d, c);
            dsu.unite(a1, b2);
            dsu.unite(a2, b1);
        }
    std::vector<int> label(40, -1);
    int next = 0;
    for (int v = 0; v < 40; ++v)
        if (dsu.find(v) == v) label[v] = next++;
    if (next != 28) fail(ErrorKind::ConsistencyError, "gluing did not leave 28 vertices");
    auto vid = [&](int slot) { return label[dsu.find(slot)]; };

    std::set<Edge> edge_set;
    auto add_edge = [&](int u, int v) {
        edge_set.insert({std::min(vid(u), vid(v)), std::max(vid(u), vid(v))});
    };
    std::vector<std::vector<int>> faces;
    for (int c = 0; c < 4; ++c) {
        for (int i = 0; i < 9; ++i) add_edge(ring(c, i), ring(c, i + 1));
        for (int i : {0, 3, 6}) add_edge(apex(c), ring(c, i));
        for (int i : {0, 3, 6})
            faces.push_back({vid(apex(c)), vid(ring(c, i)), vid(ring(c, i + 1)),
                             vid(ring(c, i + 2)), vid(ring(c, i + 3))});
    }
    if (edge_set.size() != 42)
        fail(ErrorKind::ConsistencyError, "gluing did not leave 42 edges");
    Graph g = build_graph({edge_set.begin(), edge_set.end()}, 28);

    // The pentagons cover every edge twice except the junction edges, which
    // they cover once. Those leftovers meet every vertex 0 or 2 times, so
    // they decompose into cycles: exactly four hexagons, one per junction.
    std::vector<int> cover(g.edge_count(), 0);
    for (const auto& walk : faces)
        for (std::size_t i = 0; i < walk.size(); ++i)
            ++cover[g.edge_id(walk[i], walk[(i + 1) % walk.size()])];
    std::vector<std::vector<std::pair<int, int>>> open_at(28); // (edge, other end)
    for (int e = 0; e < g.edge_count(); ++e)
        if (cover[e] == 1) {
            auto [u, v] = g.edge(e);
            open_at[u].push_back({e, v});
            open_at[v].push_back({e, u});
        }
    std::vector<char> used(g.edge_count(), 0);
    int hexagons = 0;
    for (int e0 = 0; e0 < g.edge_count(); ++e0) {
        if (cover[e0] != 1 || used[e0]) continue;
        auto [start, cur] = g.edge(e0);
        used[e0] = 1;
        std::vector<int> walk{start, cur};
        while (true) {
            int step_edge = -1, step_to = -1;
            for (auto [e, w] : open_at[cur])
                if (!used[e]) {
                    step_edge = e;
                    step_to = w;
                    break;
                }
            if (step_edge < 0) fail(ErrorKind::ConsistencyError, "junction walk dead-ends");
            used[step_edge] = 1;
            if (step_to == start) break;
            walk.push_back(step_to);
            cur = step_to;
        }
        if (walk.size() != 6)
            fail(ErrorKind::ConsistencyError, "junction walk is not a hexagon");
        faces.push_back(walk);
        ++hexagons;
    }
    if (hexagons != 4) fail(ErrorKind::ConsistencyError, "expected four junction hexagons");
    return rotation_from_faces(g, faces);
}
// (5,0) nanotube: pentagon caps, four rings of ten, two hexagon belts.
EmbeddedGraph tube_c40() {
    auto A = [](int i) { return ((i % 5) + 5) % 5; };
    auto B = [](int j) { return 5 + ((j % 10) + 10) % 10; };
    auto C = [](int j) { return 15 + ((j % 10) + 10) % 10; };
    auto D = [](int j) { return 25 + ((j % 10) + 10) % 10; };
    auto E = [](int i) { return 35 + ((i % 5) + 5) % 5; };
    std::vector<Edge> edges;
    auto push = [&](int u, int v) { edges.push_back({std::min(u, v), std::max(u, v)}); };
    for (int i = 0; i < 5; ++i) {
        push(A(i), A(i + 1));
        push(E(i), E(i + 1));
        push(A(i), B(2 * i));
        push(E(i), D(2 * i + 1));
    }
    for (int j = 0; j < 10; ++j) {
        push(B(j), B(j + 1));
        push(C(j), C(j + 1));
        push(D(j), D(j + 1));
    }
    for (int i = 0; i < 5; ++i) {
        push(B(2 * i + 1), C(2 * i + 1));
        push(C(2 * i), D(2 * i));
    }
    std::vector<std::vector<int>> faces;
    faces.push_back({A(0), A(1), A(2), A(3), A(4)});
    faces.push_back({E(0), E(1), E(2), E(3), E(4)});
    for (int i = 0; i < 5; ++i) {
        faces.push_back({A(i), B(2 * i), B(2 * i + 1), B(2 * i + 2), A(i + 1)});
        faces.push_back({E(i), D(2 * i + 1), D(2 * i + 2), D(2 * i + 3), E(i + 1)});
        faces.push_back(
            {B(2 * i + 1), B(2 * i + 2), B(2 * i + 3), C(2 * i + 3), C(2 * i + 2), C(2 * i + 1)});
        faces.push_back(
            {C(2 * i), C(2 * i + 1), C(2 * i + 2), D(2 * i + 2), D(2 * i + 1), D(2 * i)});
    }
    return embedded_from_faces(edges, 40, faces);
}

void run() {
    // Plain graphs.
    write_fixture("k5", complete_graph(5));
    write_fixture("diamond", build_graph({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
    write_fixture("c6", cycle_graph(6));

    // Embedded polyhedra.
    EmbeddedGraph k4 = k4_embedded();
    write_fixture("k4", k4.graph, &k4.rotation);
    EmbeddedGraph q3 = cube_embedded();
    write_fixture("q3", q3.graph, &q3.rotation);
    EmbeddedGraph oct = octahedron_embedded();
    write_triangulation("octahedron", oct);
    EmbeddedGraph ico = icosahedron_embedded();
    write_triangulation("icosahedron", ico);

    // Fullerenes.
    write_fullerene("c20", dodecahedron_embedded());
    write_fullerene("c24", barrel_c24());
    write_fullerene("c26", polar_c26());
    write_fullerene("c28", tetra_c28());
    write_fullerene("c40_tube", tube_c40());
    EmbeddedGraph ico2 = icosahedron_embedded();
    write_fullerene("c60", truncate_embedded(ico2.graph, trace_faces(ico2.graph, ico2.rotation)));

    // Seeded triangulations (stacked) and chordal samples.
    write_triangulation("apollonian_8", apollonian_triangulation(4, 101));
    write_triangulation("apollonian_11", apollonian_triangulation(7, 102));
    write_triangulation("apollonian_14", apollonian_triangulation(10, 103));
    for (auto [n, seed] : {std::pair{9, 11u}, {10, 12u}, {12, 13u}}) {
        Graph g = random_two_connected_chordal(n, seed);
        if (!is_chordal(g).chordal || !is_two_connected(g))
            fail(ErrorKind::ConsistencyError, "chordal sample failed its own gate");
        write_fixture("chordal_" + std::to_string(n), g);
    }
}

} // namespace

int main(int argc, char** argv) {
    out_dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(out_dir);
    try {
        run();
    } catch (const std::exception& e) {
        std::cerr << "fixture generation failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
