#pragma once

#include <algorithm>
#include <vector>

#include "thetalab/graph.hpp"

namespace thetalab {

/// Biconnected components of a connected graph. Every edge lies in exactly
/// one block; blocks are ordered by their smallest edge id and each block
/// lists its edge ids ascending.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of_edge;
    std::vector<int> cut_vertices; // ascending
};

inline BlockDecomposition block_decomposition(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> raw_blocks;

    // Iterative DFS; a frame remembers how far through adj[v] it got.
    struct Frame {
        int v;
        int parent_edge;
        int next_child = 0;
    };

    int timer = 0;
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            int v = fr.v;
            if (fr.next_child < static_cast<int>(g.adj[v].size())) {
                auto [w, e] = g.adj[v][fr.next_child++];
                if (e == fr.parent_edge) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e});
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                int child = v;
                int tree_edge = fr.parent_edge;
                stack.pop_back();
                if (stack.empty()) break;
                int u = stack.back().v;
                low[u] = std::min(low[u], low[child]);
                if (low[child] >= disc[u]) {
                    // u separates child's subtree: edges back to u-child form a block.
                    std::vector<int> block;
                    while (true) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == tree_edge) break;
                    }
                    raw_blocks.push_back(std::move(block));
                }
            }
        }
    }

    BlockDecomposition out;
    for (auto& block : raw_blocks) std::sort(block.begin(), block.end());
    std::sort(raw_blocks.begin(), raw_blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    out.blocks = std::move(raw_blocks);
    out.block_of_edge.assign(m, -1);
    for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
        for (int e : out.blocks[b]) out.block_of_edge[e] = b;

    // In a connected graph the cut vertices are exactly those lying in 2+ blocks.
    std::vector<int> blocks_touching(n, 0);
    for (const auto& block : out.blocks) {
        std::vector<int> verts;
        for (int e : block) {
            verts.push_back(g.edge(e).first);
            verts.push_back(g.edge(e).second);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (int v : verts) ++blocks_touching[v];
    }
    for (int v = 0; v < n; ++v)
        if (blocks_touching[v] >= 2) out.cut_vertices.push_back(v);
    return out;
}

/// 2-connected: at least 3 vertices, connected, no cut vertex.
inline bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    BlockDecomposition bd = block_decomposition(g);
    return bd.blocks.size() == 1 && bd.cut_vertices.empty();
}

} // namespace thetalab
