// Command-line front end: analyze a graph file, verify family-specific
// structure, or cross-check Wiener index computations.
//
// Exit codes: 0 all verdicts pass, 1 a verdict failed (including family
// gates), 2 malformed input or usage error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetalab/thetalab.hpp"

namespace {

using namespace thetalab;
using nlohmann::json;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Accumulates one run's output: human lines go straight to stdout, JSON mode
// collects everything into `doc` and dumps once at the end.
struct Session {
    std::string name;
    ParsedGraphFile input;
    bool json_out = false;
    bool want_timings = false;
    json doc = json::object();
    bool all_ok = true;

    const Graph& graph() const { return input.graph; }
};

Session open_session(const std::string& path, const std::string& command, bool json_out,
                     bool timings) {
    Session s;
    s.name = std::filesystem::path(path).stem().string();
    s.input = load_graph_file(path);
    s.json_out = json_out;
    s.want_timings = timings;
    s.doc["command"] = command;
    s.doc["input"] = graph_json(s.name, s.graph());
    s.doc["input"]["has_rotation"] = s.input.has_rotation;
    if (!json_out)
        std::cout << "graph " << s.name << ": " << s.graph().vertex_count() << " vertices, "
                  << s.graph().edge_count() << " edges"
                  << (s.input.has_rotation ? ", rotation" : "") << "\n";
    return s;
}

void note_check(Session& s, const std::string& name, const CheckReport& rep) {
    if (!rep.ok) s.all_ok = false;
    if (s.json_out) {
        s.doc["checks"].push_back(check_json(name, rep));
        return;
    }
    std::cout << "check " << name << ": ";
    if (rep.ok)
        std::cout << "ok (" << rep.checked << " facts)\n";
    else
        std::cout << "FAIL: " << rep.witness << "\n";
}

void note_check(Session& s, const std::string& name, bool ok, std::int64_t checked,
                const std::string& witness) {
    CheckReport rep;
    rep.checked = checked;
    if (!ok) rep.fail_with(witness);
    note_check(s, name, rep);
}

void note_skipped(Session& s, const std::string& name, const std::string& reason) {
    if (s.json_out) {
        json entry = {{"name", name}, {"ok", true}, {"checked", 0}, {"skipped", reason}};
        s.doc["checks"].push_back(std::move(entry));
        return;
    }
    std::cout << "check " << name << ": not applicable (" << reason << ")\n";
}

void note_comparison(Session& s, const std::string& name, PartitionOrder order, int left,
                     int right) {
    if (s.json_out) {
        json entry = {{"name", name},
                      {"order", to_string(order)},
                      {"left_classes", left},
                      {"right_classes", right}};
        s.doc["comparisons"].push_back(std::move(entry));
        return;
    }
    std::cout << "compare " << name << ": " << to_string(order) << " (" << left << " vs " << right
              << " classes)\n";
}

void note_partition(Session& s, const std::string& key, const Graph& g,
                    const EdgePartition& part) {
    if (s.json_out) {
        s.doc["partitions"][key] = partition_json(g, part);
        return;
    }
    std::cout << key << ": " << part.class_count() << " class"
              << (part.class_count() == 1 ? "" : "es") << "\n";
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        std::cout << "  class " << c << " (" << part.classes[c].size() << "):";
        for (int e : part.classes[c])
            std::cout << " {" << g.edge(e).first << "," << g.edge(e).second << "}";
        std::cout << "\n";
    }
}

int finish(Session& s, const Timer& timer) {
    if (s.want_timings) s.doc["timings"] = {{"total_ms", timer.ms()}};
    s.doc["verdict"] = s.all_ok ? "pass" : "fail";
    if (s.json_out) {
        std::cout << s.doc.dump(2) << "\n";
    } else {
        // Default output must be byte-identical across runs; wall time only
        // appears when explicitly requested.
        std::cout << "verdict: " << (s.all_ok ? "pass" : "fail");
        if (s.want_timings) std::cout << "  [" << timer.ms() << " ms]";
        std::cout << "\n";
    }
    return s.all_ok ? 0 : 1;
}

PlanarEmbedding require_embedding(const Session& s, const char* family) {
    if (!s.input.has_rotation)
        fail(ErrorKind::FamilyMismatch,
             std::string(family) + " verification needs a rotation section in the input file");
    return trace_faces(s.graph(), s.input.rotation);
}

// ---- verb: theta ------------------------------------------------------

int run_theta(const std::string& path, bool with_subdivision, bool json_out, bool timings) {
    Timer timer;
    Session s = open_session(path, "theta", json_out, timings);
    const Graph& g = s.graph();
    EdgePartition star = theta_star(g);
    note_partition(s, "theta_star_g", g, star);
    if (with_subdivision) {
        SubdividedGraph sub = subdivide(g);
        EdgePartition star_s = theta_star(sub.graph);
        LiftedPartition lifted = lift_partition(g, star, sub.map);
        note_partition(s, "theta_star_subdivision", sub.graph, star_s);
        PartitionOrder order = compare_partitions(star_s, lifted.partition);
        note_comparison(s, "subdivided closure vs lifted closure", order, star_s.class_count(),
                        lifted.partition.class_count());
        note_check(s, "subdivided closure refines lifted closure",
                   order == PartitionOrder::Equal || order == PartitionOrder::P1RefinesP2, 1,
                   "subdivided closure does not refine the lift");
    }
    return finish(s, timer);
}

// ---- verb: subdivide ---------------------------------------------------

int run_subdivide(const std::string& path, bool json_out) {
    ParsedGraphFile in = load_graph_file(path);
    SubdividedGraph sub = subdivide(in.graph);
    std::optional<std::vector<std::vector<int>>> rotation;
    if (in.has_rotation) {
        // Midpoint insertion keeps the embedding: each neighbor is replaced
        // by the midpoint of the joining edge, midpoints see both endpoints.
        int n = in.graph.vertex_count();
        rotation.emplace(sub.graph.vertex_count());
        for (int v = 0; v < n; ++v)
            for (int u : in.rotation[v])
                (*rotation)[v].push_back(n + in.graph.edge_id(v, u));
        for (int e = 0; e < in.graph.edge_count(); ++e)
            (*rotation)[n + e] = {in.graph.edge(e).first, in.graph.edge(e).second};
    }
    std::string text = serialize_graph_file(sub.graph, rotation ? &*rotation : nullptr);
    if (json_out) {
        json doc = {{"command", "subdivide"},
                    {"input", graph_json(std::filesystem::path(path).stem().string(), in.graph)},
                    {"subdivision",
                     {{"vertices", sub.graph.vertex_count()},
                      {"edges", sub.graph.edge_count()},
                      {"file", text}}},
                    {"verdict", "pass"}};
        doc["input"]["has_rotation"] = in.has_rotation;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

// ---- verb: verify ------------------------------------------------------

void verify_generic(Session& s) {
    const Graph& g = s.graph();
    SubdividedGraph sub = subdivide(g);
    note_check(s, "subdivision distance formulas", check_distance_formulas(g, sub));
    note_check(s, "direct pair projection", project_check(g, sub));
    note_check(s, "converse pair existence", converse_pairs_check(g, sub));
    SubdivisionEquality eq = subdivision_equality(g);
    note_comparison(s, "subdivided closure vs lifted closure", eq.order, eq.sub_classes,
                    eq.lift_classes);
    note_check(s, "subdivided closure refines lifted closure",
               eq.order == PartitionOrder::Equal || eq.order == PartitionOrder::P1RefinesP2, 1,
               "subdivided closure does not refine the lift");
}

void verify_fullerene(Session& s, int max_cycle_len) {
    const Graph& g = s.graph();
    PlanarEmbedding emb = require_embedding(s, "fullerene");
    FullereneCheck fc = validate_fullerene(g, emb);
    if (!fc.accepted)
        fail(ErrorKind::FamilyMismatch,
             "not a fullerene: cubic=" + std::to_string(fc.is_cubic) +
                 " pentagons=" + std::to_string(fc.pentagon_count) +
                 " hexagons=" + std::to_string(fc.hexagon_count));
    if (s.json_out)
        s.doc["faces"] = {{"pentagons", fc.pentagon_count}, {"hexagons", fc.hexagon_count}};
    else
        std::cout << "faces: " << fc.pentagon_count << " pentagons, " << fc.hexagon_count
                  << " hexagons\n";

    SubdivisionEquality eq = fullerene_subdivision_check(g, emb);
    note_comparison(s, "subdivided closure vs lifted closure", eq.order, eq.sub_classes,
                    eq.lift_classes);
    note_check(s, "subdivided closure equals lifted closure", eq.equal, 1,
               "partitions differ: " + std::string(to_string(eq.order)));

    SeparatingCycleReport scan = separating_cycle_scan(g, emb, max_cycle_len);
    note_check(s, "separating cycle scan", scan.ok, scan.cycles_checked, scan.witness);
    if (s.json_out)
        s.doc["separating_nine_cycles"] = scan.separating_nine;
    else
        std::cout << "separating 9-cycles: " << scan.separating_nine << "\n";

    PhiBarReport pb = phi_bar_refinement_check(g, emb);
    note_comparison(s, "facial opposite-pair closure vs theta closure",
                    pb.equal ? PartitionOrder::Equal : PartitionOrder::P1RefinesP2,
                    pb.phi_bar_classes, pb.theta_classes);
    note_check(s, "facial opposite-pair closure refines theta closure", pb.refines, 1,
               "closure of the facial relation does not refine the theta closure");

    std::vector<Railroad> rails = railroads(g, emb);
    int cycles = 0;
    for (const Railroad& r : rails) cycles += r.is_cycle ? 1 : 0;
    if (s.json_out)
        s.doc["railroads"] = {{"count", rails.size()},
                              {"cycles", cycles},
                              {"paths", static_cast<int>(rails.size()) - cycles}};
    else
        std::cout << "railroads: " << rails.size() << " (" << cycles << " cycles, "
                  << rails.size() - cycles << " paths)\n";
}

void verify_triangulation(Session& s) {
    const Graph& g = s.graph();
    PlanarEmbedding emb = require_embedding(s, "triangulation");
    if (!validate_triangulation(g, emb))
        fail(ErrorKind::FamilyMismatch, "embedding has a non-triangular face");
    note_check(s, "subdivided closure matches predicted coloring",
               triangulation_subdivision_check(g, emb));
}

void verify_chordal(Session& s) {
    const Graph& g = s.graph();
    ChordalityResult ch = is_chordal(g);
    if (!ch.chordal) {
        std::string cyc;
        for (int v : ch.chordless_cycle) cyc += (cyc.empty() ? "" : ",") + std::to_string(v);
        fail(ErrorKind::FamilyMismatch, "not chordal: chordless cycle " + cyc);
    }

    if (is_two_connected(g)) {
        note_check(s, "subdivided closure matches residual coloring", chordal_subdivision_check(g));
        ExposedEdgeReport ee = exposed_edges(g);
        if (s.json_out)
            s.doc["exposed_edges"] = {{"count", ee.exposed_edges.size()},
                                      {"residual_components", ee.component_count}};
        else
            std::cout << "exposed edges: " << ee.exposed_edges.size() << ", residual components: "
                      << ee.component_count << "\n";
    } else {
        note_skipped(s, "subdivided closure matches residual coloring",
                     "requires 2-connected input");
        SubdividedGraph sub = subdivide(g);
        note_partition(s, "theta_star_subdivision", sub.graph, theta_star(sub.graph));
    }

    OppositeClosureReport oc = chordal_opposite_closure_check(g);
    note_comparison(s, "opposite-pair closure vs subdivided closure", oc.order,
                    oc.opposite_classes, oc.theta_classes);
    note_check(s, "opposite-pair closure refines subdivided closure", oc.refines, 1,
               "closure of the opposite-pair relation does not refine the subdivided closure");
}

int run_verify(const std::string& path, const std::string& family, int max_cycle_len,
               bool json_out, bool timings) {
    Timer timer;
    Session s = open_session(path, "verify", json_out, timings);
    s.doc["family"] = family;
    if (!json_out) std::cout << "family: " << family << "\n";
    try {
        if (family == "fullerene")
            verify_fullerene(s, max_cycle_len);
        else if (family == "triangulation")
            verify_triangulation(s);
        else if (family == "chordal")
            verify_chordal(s);
        else
            verify_generic(s);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::FamilyMismatch) throw;
        note_check(s, "family gate", false, 1, e.what());
    }
    return finish(s, timer);
}

// ---- verb: wiener ------------------------------------------------------

int run_wiener(const std::string& path, const std::string& method, bool json_out, bool timings) {
    Timer timer;
    Session s = open_session(path, "wiener", json_out, timings);
    const Graph& g = s.graph();
    std::optional<std::int64_t> by_bfs, by_cuts;
    if (method == "bfs" || method == "both") {
        by_bfs = wiener_bfs(g);
        if (s.json_out)
            s.doc["wiener"]["bfs"] = *by_bfs;
        else
            std::cout << "wiener (bfs): " << *by_bfs << "\n";
    }
    if (method == "cuts" || method == "both") {
        try {
            by_cuts = wiener_via_cuts(g);
            if (s.json_out)
                s.doc["wiener"]["cuts"] = *by_cuts;
            else
                std::cout << "wiener (cuts): " << *by_cuts << "\n";
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotPartialCube &&
                e.kind() != ErrorKind::ClassRemovalNotTwoComponents)
                throw;
            note_check(s, "cut method applicability", false, 1, e.what());
        }
    }
    if (by_bfs && by_cuts)
        note_check(s, "cut method agrees with distance sums", *by_bfs == *by_cuts, 1,
                   std::to_string(*by_cuts) + " != " + std::to_string(*by_bfs));
    return finish(s, timer);
}

// ---- verb: report ------------------------------------------------------

std::string detect_family(const ParsedGraphFile& in) {
    if (in.has_rotation) {
        try {
            PlanarEmbedding emb = trace_faces(in.graph, in.rotation);
            if (validate_fullerene(in.graph, emb).accepted) return "fullerene";
            if (validate_triangulation(in.graph, emb)) return "triangulation";
        } catch (const Error&) {
            // fall through: unusable rotation disqualifies the planar families
        }
    }
    if (is_chordal(in.graph).chordal) return "chordal";
    return "generic";
}

int run_report(const std::string& path, std::string family, int max_cycle_len, bool timings) {
    Timer timer;
    Session s = open_session(path, "report", /*json_out=*/true, timings);
    if (family == "auto") family = detect_family(s.input);
    s.doc["family"] = family;

    const Graph& g = s.graph();
    EdgePartition star = theta_star(g);
    SubdividedGraph sub = subdivide(g);
    note_partition(s, "theta_star_g", g, star);
    note_partition(s, "theta_star_subdivision", sub.graph, theta_star(sub.graph));

    try {
        if (family == "fullerene")
            verify_fullerene(s, max_cycle_len);
        else if (family == "triangulation")
            verify_triangulation(s);
        else if (family == "chordal")
            verify_chordal(s);
        else
            verify_generic(s);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::FamilyMismatch) throw;
        note_check(s, "family gate", false, 1, e.what());
    }
    return finish(s, timer);
}

bool is_verdict_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotBipartite:
        case ErrorKind::NotInTheta:
        case ErrorKind::NotPartialCube:
        case ErrorKind::ClassRemovalNotTwoComponents:
        case ErrorKind::NotFullerene:
        case ErrorKind::NotTriangulation:
        case ErrorKind::NotChordal:
        case ErrorKind::Not2Connected:
        case ErrorKind::FamilyMismatch:
            return true;
        default:
            return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta relation analyzer: edge partitions of graphs and their subdivisions"};
    app.require_subcommand(1);

    std::string file, family = "generic", method = "both";
    int max_cycle_len = 9;
    bool with_subdivision = false, json_out = false, timings = false;

    CLI::App* theta = app.add_subcommand("theta", "edge classes of the distance relation closure");
    theta->add_option("file", file, "graph file")->required();
    theta->add_flag("--subdivide", with_subdivision, "also analyze the full subdivision");
    theta->add_flag("--json", json_out, "machine-readable output");
    theta->add_flag("--timings", timings, "include wall times in JSON output");

    CLI::App* subdiv = app.add_subcommand("subdivide", "emit the full subdivision as a graph file");
    subdiv->add_option("file", file, "graph file")->required();
    subdiv->add_flag("--json", json_out, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "run a family's structural verdict suite");
    verify->add_option("file", file, "graph file")->required();
    verify->add_option("--family", family, "fullerene|triangulation|chordal|generic")
        ->check(CLI::IsMember({"fullerene", "triangulation", "chordal", "generic"}));
    verify->add_option("--max-cycle-len", max_cycle_len, "separating cycle scan bound")
        ->check(CLI::Range(3, 16));
    verify->add_flag("--json", json_out, "machine-readable output");
    verify->add_flag("--timings", timings, "include wall times in JSON output");

    CLI::App* wiener = app.add_subcommand("wiener", "sum of all pairwise distances");
    wiener->add_option("file", file, "graph file")->required();
    wiener->add_option("--method", method, "bfs|cuts|both")
        ->check(CLI::IsMember({"bfs", "cuts", "both"}));
    wiener->add_flag("--json", json_out, "machine-readable output");
    wiener->add_flag("--timings", timings, "include wall times in JSON output");

    CLI::App* report = app.add_subcommand("report", "full JSON analysis document");
    report->add_option("file", file, "graph file")->required();
    report->add_option("--family", family, "auto|fullerene|triangulation|chordal|generic")
        ->default_val("auto")
        ->check(CLI::IsMember({"auto", "fullerene", "triangulation", "chordal", "generic"}));
    report->add_option("--max-cycle-len", max_cycle_len, "separating cycle scan bound")
        ->check(CLI::Range(3, 16));
    report->add_flag("--timings", timings, "include wall times in JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (theta->parsed()) return run_theta(file, with_subdivision, json_out, timings);
        if (subdiv->parsed()) return run_subdivide(file, json_out);
        if (verify->parsed()) return run_verify(file, family, max_cycle_len, json_out, timings);
        if (wiener->parsed()) return run_wiener(file, method, json_out, timings);
        return run_report(file, family, max_cycle_len, timings);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_verdict_error(e.kind()) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
