// End-to-end contract test for the theta_lab binary. Asserts the stable
// CI surface: exit codes (0 pass / 1 verdict failure / 2 input error),
// human-output landmarks, JSON conformance to the published schema, and
// byte-determinism of all default (non --timings) output.
//
// Usage: cli_contract_tests <theta_lab-binary> <data-dir> <schema.json>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using nlohmann::json;

int checks = 0;
int failures = 0;

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cout << "FAIL: " << what << "\n";
    }
}

void section(const std::string& name) { std::cout << "-- " << name << "\n"; }

// Wraps a string in single quotes for /bin/sh.
std::string q(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::perror("popen");
        std::exit(2);
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128;
    r.output = std::move(out);
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        expect(false, what + ": output is not valid JSON: " + e.what());
        return json();
    }
}

// ---- minimal JSON Schema (draft-07 subset) validator --------------------
// Supports exactly the vocabulary the published schema uses: type, enum,
// required, properties, additionalProperties (bool or schema), items,
// minItems, maxItems.

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "null") return v.is_null();
    return false;
}

void validate_schema(const json& schema, const json& value, const std::string& where,
                     std::vector<std::string>& errors) {
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        if (!type_matches(t, value)) {
            errors.push_back(where + ": expected " + t + ", got " + value.type_name());
            return;
        }
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const json& option : schema["enum"])
            if (option == value) hit = true;
        if (!hit) errors.push_back(where + ": value " + value.dump() + " not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const json& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(where + ": missing required key \"" +
                                     key.get<std::string>() + "\"");
        const json props = schema.value("properties", json::object());
        for (auto it = value.begin(); it != value.end(); ++it) {
            const std::string child = where + "." + it.key();
            if (props.contains(it.key())) {
                validate_schema(props[it.key()], it.value(), child, errors);
            } else if (schema.contains("additionalProperties")) {
                const json& extra = schema["additionalProperties"];
                if (extra.is_boolean() && !extra.get<bool>())
                    errors.push_back(child + ": key not allowed by schema");
                else if (extra.is_object())
                    validate_schema(extra, it.value(), child, errors);
            }
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") &&
            value.size() < schema["minItems"].get<std::size_t>())
            errors.push_back(where + ": fewer than minItems elements");
        if (schema.contains("maxItems") &&
            value.size() > schema["maxItems"].get<std::size_t>())
            errors.push_back(where + ": more than maxItems elements");
        if (schema.contains("items"))
            for (std::size_t i = 0; i < value.size(); ++i)
                validate_schema(schema["items"], value[i],
                                where + "[" + std::to_string(i) + "]", errors);
    }
}

json the_schema;

void expect_schema(const json& doc, const std::string& what) {
    std::vector<std::string> errors;
    validate_schema(the_schema, doc, "$", errors);
    ++checks;
    if (!errors.empty()) {
        ++failures;
        std::cout << "FAIL: " << what << ": schema violations:\n";
        for (const std::string& e : errors) std::cout << "      " << e << "\n";
    }
}

// A check entry by name, or null.
json find_check(const json& doc, const std::string& name) {
    if (!doc.contains("checks")) return json();
    for (const json& c : doc["checks"])
        if (c.value("name", "") == name) return c;
    return json();
}

bool all_checks_ok(const json& doc) {
    if (!doc.contains("checks")) return true;
    for (const json& c : doc["checks"])
        if (!c.value("ok", false)) return false;
    return true;
}

void expect_identical_reruns(const std::string& cmd, const std::string& what) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    expect(a.output == b.output && a.exit_code == b.exit_code,
           what + ": repeated invocation produced different bytes or exit code");
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: cli_contract_tests <theta_lab> <data-dir> <schema.json>\n";
        return 2;
    }
    const std::string cli = q(argv[1]);
    const std::string data = argv[2];
    {
        std::ifstream in(argv[3]);
        if (!in) {
            std::cerr << "cannot open schema " << argv[3] << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        the_schema = json::parse(ss.str());
    }
    auto fx = [&](const std::string& name) { return q(data + "/" + name + ".graph"); };

    // Malformed inputs live in a scratch directory, not in data/.
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "thetalab_cli_contract";
    fs::create_directories(tmp);
    auto write_tmp = [&](const std::string& name, const std::string& text) {
        std::ofstream out(tmp / name);
        out << text;
        return q((tmp / name).string());
    };
    const std::string dup_file = write_tmp("dup.graph", "graph 2 2\n0 1\n0 1\n");
    const std::string loop_file = write_tmp("loop.graph", "graph 2 2\n0 0\n0 1\n");
    const std::string garbage_file = write_tmp("garbage.graph", "hello\n");

    section("usage and input errors exit 2");
    expect(run_cli(cli + " --help 2>&1").exit_code == 0, "--help exits 0");
    expect(run_cli(cli + " 2>&1").exit_code == 2, "missing subcommand exits 2");
    expect(run_cli(cli + " theta --no-such-flag " + fx("c6") + " 2>&1").exit_code == 2,
           "unknown flag exits 2");
    expect(run_cli(cli + " verify --max-cycle-len 99 " + fx("c20") + " 2>&1").exit_code == 2,
           "out-of-range --max-cycle-len exits 2");
    {
        RunResult r = run_cli(cli + " theta " + fx("no_such_fixture") + " 2>&1");
        expect(r.exit_code == 2, "missing file exits 2");
        expect(contains(r.output, "error:"), "missing file names the error");
    }
    expect(run_cli(cli + " theta " + dup_file + " 2>&1").exit_code == 2,
           "duplicate edge exits 2");
    expect(run_cli(cli + " theta " + loop_file + " 2>&1").exit_code == 2, "loop edge exits 2");
    expect(run_cli(cli + " report " + garbage_file + " 2>&1").exit_code == 2,
           "garbage header exits 2");

    section("theta: human output");
    {
        RunResult r = run_cli(cli + " theta " + fx("c6") + " 2>&1");
        expect(r.exit_code == 0, "theta c6 exits 0");
        expect(contains(r.output, "theta_star_g: 3 classes"), "theta c6 reports 3 classes");
        expect(contains(r.output, "verdict: pass"), "theta c6 verdict pass");
        expect(!contains(r.output, " ms]"), "default output carries no wall times");
        expect_identical_reruns(cli + " theta " + fx("c6") + " 2>&1", "theta c6");
    }

    section("theta: JSON output");
    {
        RunResult r = run_cli(cli + " theta " + fx("c6") + " --json 2>/dev/null");
        expect(r.exit_code == 0, "theta c6 --json exits 0");
        json doc = parse_json(r.output, "theta c6 --json");
        expect_schema(doc, "theta c6 --json");
        expect(doc.value("command", "") == "theta", "command field is theta");
        expect(doc["input"].value("name", "") == "c6", "input name is c6");
        expect(doc["input"].value("vertices", 0) == 6, "input has 6 vertices");
        expect(doc["input"].value("has_rotation", true) == false, "c6 has no rotation");
        expect(doc.value("verdict", "") == "pass", "verdict pass");
        expect(doc.contains("partitions") &&
                   doc["partitions"]["theta_star_g"].size() == 3,
               "3 classes in theta_star_g");
        expect(!doc.contains("timings"), "no timings block without --timings");
        expect_identical_reruns(cli + " theta " + fx("c6") + " --json 2>/dev/null",
                                "theta c6 --json");
    }
    {
        // K4: the subdivided closure strictly refines the lifted closure
        // (4 classes upstairs vs 1 downstairs); refinement is the verdict.
        RunResult r = run_cli(cli + " theta --subdivide " + fx("k4") + " --json 2>/dev/null");
        expect(r.exit_code == 0, "theta --subdivide k4 exits 0");
        json doc = parse_json(r.output, "theta --subdivide k4 --json");
        expect_schema(doc, "theta --subdivide k4 --json");
        expect(doc.contains("partitions") &&
                   doc["partitions"].contains("theta_star_subdivision") &&
                   doc["partitions"]["theta_star_subdivision"].size() == 4,
               "S(K4) has 4 classes");
        expect(doc.contains("comparisons") && doc["comparisons"].size() == 1 &&
                   doc["comparisons"][0].value("order", "") == "P1RefinesP2" &&
                   doc["comparisons"][0].value("left_classes", 0) == 4 &&
                   doc["comparisons"][0].value("right_classes", 0) == 1,
               "S(K4) closure strictly refines the lift (4 vs 1)");
        expect(doc.value("verdict", "") == "pass", "refinement verdict passes on K4");
    }

    section("subdivide round-trips through theta");
    {
        RunResult r = run_cli(cli + " subdivide " + fx("c6") + " 2>/dev/null");
        expect(r.exit_code == 0, "subdivide c6 exits 0");
        expect(r.output.rfind("graph 12 12\n", 0) == 0,
               "subdivision of C6 is a 12-vertex 12-edge file");
        std::string sub_file = write_tmp("c6_subdivided.graph", r.output);
        RunResult back = run_cli(cli + " theta " + sub_file + " 2>&1");
        expect(back.exit_code == 0, "theta on emitted subdivision exits 0");
        expect(contains(back.output, "theta_star_g: 6 classes"),
               "C12 = S(C6) has 6 classes");
        expect_identical_reruns(cli + " subdivide " + fx("c6") + " 2>/dev/null",
                                "subdivide c6");
    }
    {
        RunResult r = run_cli(cli + " subdivide " + fx("c6") + " --json 2>/dev/null");
        expect(r.exit_code == 0, "subdivide c6 --json exits 0");
        json doc = parse_json(r.output, "subdivide c6 --json");
        expect_schema(doc, "subdivide c6 --json");
        expect(doc.contains("subdivision") &&
                   doc["subdivision"].value("vertices", 0) == 12 &&
                   doc["subdivision"].value("edges", 0) == 12,
               "subdivision block counts 12/12");
        expect(doc["subdivision"].value("file", "").rfind("graph 12 12\n", 0) == 0,
               "embedded file text starts with its header");
    }
    {
        // Rotation systems survive subdivision: the emitted file of an
        // embedded input carries a rotation section that still traces.
        RunResult r = run_cli(cli + " subdivide " + fx("k4") + " 2>/dev/null");
        expect(r.exit_code == 0, "subdivide k4 exits 0");
        expect(contains(r.output, "rotation"), "subdivided K4 keeps a rotation section");
        std::string sub_file = write_tmp("k4_subdivided.graph", r.output);
        RunResult ver = run_cli(cli + " verify --family triangulation " + sub_file + " 2>&1");
        expect(ver.exit_code == 1,
               "subdivided K4 is not a triangulation (family gate verdict)");
        expect(contains(ver.output, "check family gate: FAIL"),
               "family gate failure is reported as a failed check");
    }

    section("verify: fullerene suite");
    {
        RunResult r = run_cli(cli + " verify --family fullerene " + fx("c60") + " 2>&1");
        expect(r.exit_code == 0, "verify fullerene c60 exits 0");
        expect(contains(r.output, "faces: 12 pentagons, 20 hexagons"),
               "C60 face census printed");
        expect(contains(r.output, "verdict: pass"), "C60 verdict pass");
        expect(!contains(r.output, " ms]"), "no wall times by default");
    }
    {
        RunResult r =
            run_cli(cli + " verify --family fullerene " + fx("c60") + " --json 2>/dev/null");
        expect(r.exit_code == 0, "verify fullerene c60 --json exits 0");
        json doc = parse_json(r.output, "verify fullerene c60 --json");
        expect_schema(doc, "verify fullerene c60 --json");
        expect(doc.value("family", "") == "fullerene", "family recorded");
        expect(doc.contains("faces") && doc["faces"].value("pentagons", 0) == 12 &&
                   doc["faces"].value("hexagons", 0) == 20,
               "C60 faces 12/20");
        expect(doc.contains("separating_nine_cycles"), "separating 9-cycle count present");
        expect(doc.contains("railroads"), "railroad census present");
        expect(all_checks_ok(doc), "every C60 check passes");
        expect(doc.value("verdict", "") == "pass", "C60 verdict pass");
        expect_identical_reruns(
            cli + " verify --family fullerene " + fx("c60") + " --json 2>/dev/null",
            "verify fullerene c60 --json");
    }
    {
        RunResult r =
            run_cli(cli + " verify --family fullerene " + fx("k4") + " --json 2>/dev/null");
        expect(r.exit_code == 1, "verify fullerene on K4 exits 1");
        json doc = parse_json(r.output, "verify fullerene k4 --json");
        expect_schema(doc, "verify fullerene k4 --json");
        json gate = find_check(doc, "family gate");
        expect(!gate.is_null() && gate.value("ok", true) == false &&
                   contains(gate.value("witness", ""), "not a fullerene"),
               "family gate failure carries a diagnostic witness");
        expect(doc.value("verdict", "") == "fail", "verdict fail on family mismatch");
    }

    section("verify: triangulation and chordal suites");
    {
        RunResult r = run_cli(cli + " verify --family triangulation " + fx("octahedron") +
                              " --json 2>/dev/null");
        expect(r.exit_code == 0, "verify triangulation octahedron exits 0");
        json doc = parse_json(r.output, "verify triangulation octahedron --json");
        expect_schema(doc, "verify triangulation octahedron --json");
        expect(all_checks_ok(doc) && doc.value("verdict", "") == "pass",
               "octahedron triangulation suite passes");
    }
    {
        RunResult r =
            run_cli(cli + " verify --family chordal " + fx("diamond") + " --json 2>/dev/null");
        expect(r.exit_code == 0, "verify chordal diamond exits 0");
        json doc = parse_json(r.output, "verify chordal diamond --json");
        expect_schema(doc, "verify chordal diamond --json");
        expect(doc.contains("exposed_edges") &&
                   doc["exposed_edges"].value("count", 0) == 4 &&
                   doc["exposed_edges"].value("residual_components", 0) == 3,
               "diamond has 4 exposed edges and 3 residual components");
        json coloring = find_check(doc, "subdivided closure matches residual coloring");
        expect(!coloring.is_null() && coloring.value("ok", false),
               "residual coloring check passes on the diamond");
        bool found_comparison = false;
        for (const json& c : doc.value("comparisons", json::array()))
            if (c.value("name", "") == "opposite-pair closure vs subdivided closure") {
                found_comparison = true;
                expect(c.value("order", "") == "P1RefinesP2" &&
                           c.value("left_classes", 0) == 4 &&
                           c.value("right_classes", 0) == 3,
                       "diamond opposite-pair closure strictly refines (4 vs 3)");
            }
        expect(found_comparison, "opposite-pair comparison reported");
        expect(doc.value("verdict", "") == "pass",
               "chordal verdict is refinement, which holds on the diamond");
    }
    {
        RunResult r = run_cli(cli + " verify --family chordal " + fx("c6") + " 2>&1");
        expect(r.exit_code == 1, "verify chordal on C6 exits 1");
        expect(contains(r.output, "chordless cycle"), "chordality gate names a witness cycle");
    }

    section("wiener");
    {
        RunResult r = run_cli(cli + " wiener " + fx("c6") + " 2>&1");
        expect(r.exit_code == 0, "wiener c6 exits 0");
        expect(contains(r.output, "wiener (bfs): 27"), "C6 distance-sum value 27");
        expect(contains(r.output, "wiener (cuts): 27"), "C6 cut-method value 27");
        expect(contains(r.output, "check cut method agrees with distance sums: ok"),
               "agreement check passes");
    }
    {
        RunResult r = run_cli(cli + " wiener " + fx("q3") + " --json 2>/dev/null");
        expect(r.exit_code == 0, "wiener q3 --json exits 0");
        json doc = parse_json(r.output, "wiener q3 --json");
        expect_schema(doc, "wiener q3 --json");
        expect(doc.contains("wiener") && doc["wiener"].value("bfs", 0) == 48 &&
                   doc["wiener"].value("cuts", 0) == 48,
               "Q3 wiener 48 by both routes");
        expect(doc.value("verdict", "") == "pass", "Q3 wiener verdict pass");
    }
    {
        RunResult r = run_cli(cli + " wiener --method cuts " + fx("k5") + " 2>&1");
        expect(r.exit_code == 1, "cut method on K5 exits 1");
        expect(contains(r.output, "check cut method applicability: FAIL"),
               "K5 rejected by the cut method");
    }
    {
        RunResult r = run_cli(cli + " wiener --method bfs " + fx("k5") + " 2>&1");
        expect(r.exit_code == 0, "bfs-only wiener on K5 exits 0");
        expect(contains(r.output, "wiener (bfs): 10"), "K5 distance sum is 10");
    }

    section("report");
    {
        RunResult r = run_cli(cli + " report " + fx("k4") + " 2>/dev/null");
        expect(r.exit_code == 0, "report k4 exits 0");
        json doc = parse_json(r.output, "report k4");
        expect_schema(doc, "report k4");
        expect(doc.value("command", "") == "report", "command field is report");
        expect(doc.value("family", "") == "triangulation",
               "K4 with rotation auto-detects as triangulation");
        expect(doc.contains("partitions") &&
                   doc["partitions"].contains("theta_star_g") &&
                   doc["partitions"].contains("theta_star_subdivision"),
               "report lists both partitions");
        expect(doc["partitions"]["theta_star_g"].size() == 1 &&
                   doc["partitions"]["theta_star_subdivision"].size() == 4,
               "K4 has 1 class downstairs and 4 upstairs");
        expect(doc.value("verdict", "") == "pass", "K4 report verdict pass");
        expect_identical_reruns(cli + " report " + fx("k4") + " 2>/dev/null", "report k4");
    }
    {
        RunResult r = run_cli(cli + " report " + fx("c20") + " 2>/dev/null");
        expect(r.exit_code == 0, "report c20 exits 0");
        json doc = parse_json(r.output, "report c20");
        expect_schema(doc, "report c20");
        expect(doc.value("family", "") == "fullerene", "C20 auto-detects as fullerene");
        expect(doc.value("separating_nine_cycles", -1) == 20,
               "C20 has exactly 20 separating 9-cycles");
        expect(doc.value("verdict", "") == "pass", "C20 report verdict pass");
    }
    {
        RunResult r = run_cli(cli + " report " + fx("diamond") + " 2>/dev/null");
        expect(r.exit_code == 0, "report diamond exits 0");
        json doc = parse_json(r.output, "report diamond");
        expect_schema(doc, "report diamond");
        expect(doc.value("family", "") == "chordal", "diamond auto-detects as chordal");
        expect(doc["partitions"]["theta_star_subdivision"].size() == 3,
               "S(diamond) has 3 classes");
    }
    {
        RunResult r = run_cli(cli + " report " + fx("c6") + " 2>/dev/null");
        expect(r.exit_code == 0, "report c6 exits 0");
        json doc = parse_json(r.output, "report c6");
        expect_schema(doc, "report c6");
        expect(doc.value("family", "") == "generic",
               "rotation-less non-chordal input falls back to generic");
    }

    section("timings are opt-in");
    {
        RunResult r = run_cli(cli + " verify --family triangulation " + fx("k4") +
                              " --json --timings 2>/dev/null");
        expect(r.exit_code == 0, "verify with --timings exits 0");
        json doc = parse_json(r.output, "verify k4 --timings");
        expect_schema(doc, "verify k4 --timings");
        expect(doc.contains("timings") && doc["timings"].contains("total_ms") &&
                   doc["timings"]["total_ms"].is_number(),
               "timings block present and numeric with --timings");
    }

    std::cout << "cli contract: " << (checks - failures) << "/" << checks << " checks passed\n";
    return failures == 0 ? 0 : 1;
}
