#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"

namespace thetalab {

/// Text format: "graph <n> <m>", m edge lines "u v" with u < v, then an
/// optional "rotation" section of n lines giving each vertex's cyclic
/// neighbor order. Parsing a normalized file and serializing gives back the
/// identical bytes.
struct ParsedGraphFile {
    Graph graph;
    bool has_rotation = false;
    std::vector<std::vector<int>> rotation;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

inline int parse_int(std::string_view token, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        fail(ErrorKind::SyntaxError,
             "line " + std::to_string(line_no) + ": expected integer, got '" +
                 std::string(token) + "'");
    return value;
}

} // namespace detail

inline ParsedGraphFile parse_graph_file(const std::string& text) {
    std::vector<std::string_view> lines;
    {
        std::string_view rest = text;
        while (!rest.empty()) {
            std::size_t nl = rest.find('\n');
            if (nl == std::string_view::npos) {
                lines.push_back(rest);
                break;
            }
            lines.push_back(rest.substr(0, nl));
            rest.remove_prefix(nl + 1);
        }
    }
    std::size_t at = 0;
    auto next_line = [&](const char* what) -> std::string_view {
        if (at >= lines.size())
            fail(ErrorKind::SyntaxError,
                 "line " + std::to_string(lines.size() + 1) + ": missing " + what);
        return lines[at++];
    };

    auto header = detail::split_tokens(next_line("header"));
    if (header.size() != 3 || header[0] != "graph")
        fail(ErrorKind::SyntaxError, "line 1: expected 'graph <n> <m>'");
    int n = detail::parse_int(header[1], 1);
    int m = detail::parse_int(header[2], 1);
    if (n < 1 || m < 0)
        fail(ErrorKind::SyntaxError, "line 1: vertex count must be >= 1, edges >= 0");

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        int line_no = static_cast<int>(at) + 1;
        auto tokens = detail::split_tokens(next_line("edge line"));
        if (tokens.size() != 2)
            fail(ErrorKind::SyntaxError,
                 "line " + std::to_string(line_no) + ": expected 'u v'");
        int u = detail::parse_int(tokens[0], line_no);
        int v = detail::parse_int(tokens[1], line_no);
        if (u < 0 || v >= n || u >= v)
            fail(ErrorKind::SyntaxError, "line " + std::to_string(line_no) +
                                             ": edge endpoints need 0 <= u < v < n");
        edges.push_back({u, v});
    }

    ParsedGraphFile out;
    out.graph = build_graph(edges, n);

    if (at < lines.size()) {
        int line_no = static_cast<int>(at) + 1;
        auto tokens = detail::split_tokens(next_line("section"));
        if (tokens.size() != 1 || tokens[0] != "rotation")
            fail(ErrorKind::SyntaxError,
                 "line " + std::to_string(line_no) + ": expected 'rotation' or end of file");
        out.has_rotation = true;
        out.rotation.resize(n);
        for (int v = 0; v < n; ++v) {
            line_no = static_cast<int>(at) + 1;
            auto row = detail::split_tokens(next_line("rotation line"));
            for (auto tok : row) out.rotation[v].push_back(detail::parse_int(tok, line_no));
            std::vector<int> sorted_row = out.rotation[v];
            std::sort(sorted_row.begin(), sorted_row.end());
            std::vector<int> expected;
            for (auto [w, e] : out.graph.adj[v]) {
                (void)e;
                expected.push_back(w);
            }
            if (sorted_row != expected)
                fail(ErrorKind::ConsistencyError,
                     "line " + std::to_string(line_no) + ": rotation of vertex " +
                         std::to_string(v) + " does not list its neighbors exactly once");
        }
    }
    if (at < lines.size())
        fail(ErrorKind::SyntaxError,
             "line " + std::to_string(at + 1) + ": unexpected trailing content");
    return out;
}

inline std::string serialize_graph_file(const Graph& g,
                                        const std::vector<std::vector<int>>* rotation = nullptr) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int e = 0; e < g.edge_count(); ++e)
        out << g.edge(e).first << ' ' << g.edge(e).second << '\n';
    if (rotation) {
        out << "rotation\n";
        for (const auto& row : *rotation) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? " " : "") << row[i];
            out << '\n';
        }
    }
    return out.str();
}

inline ParsedGraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::SyntaxError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_file(buf.str());
}

inline void save_graph_file(const std::string& path, const Graph& g,
                            const std::vector<std::vector<int>>* rotation = nullptr) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::SyntaxError, "cannot write '" + path + "'");
    out << serialize_graph_file(g, rotation);
}

} // namespace thetalab
