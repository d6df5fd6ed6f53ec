#pragma once

// Test-only oracles, deliberately independent of the library's solver
// and planarity implementations.

#include <algorithm>
#include <set>
#include <vector>

#include "orient/graph.hpp"
#include "orient/orientation.hpp"

namespace orient::testsupport {

// Chromatic number by plain k^n assignment enumeration.
inline int brute_chromatic(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(n, 0);
        while (true) {
            bool proper = true;
            for (const auto& [u, v] : g.edges())
                if (color[u] == color[v]) { proper = false; break; }
            if (proper) return k;
            int i = 0;
            while (i < n && ++color[i] == k) color[i++] = 0;
            if (i == n) break;
        }
    }
    return n;
}

// Planarity for n <= 6: the only obstructions that fit are a complete
// 5-clique (possibly with one edge routed through the sixth vertex) and
// the complete bipartite 3+3 graph.
inline bool brute_planar_upto6(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 4) return true;
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;

    std::vector<std::vector<int>> five_subsets;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (pick.size() == 5) { five_subsets.push_back(pick); return; }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);

    for (const auto& sub : five_subsets) {
        int missing_u = -1, missing_v = -1, missing = 0;
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = i + 1; j < 5; ++j)
                if (!g.has_edge(sub[i], sub[j])) {
                    ++missing;
                    missing_u = sub[i];
                    missing_v = sub[j];
                }
        if (missing == 0) return false;  // K5
        if (missing == 1 && n == 6) {
            // maybe the missing pair is joined through the leftover vertex
            for (int s = 0; s < n; ++s) {
                if (std::find(sub.begin(), sub.end(), s) != sub.end()) continue;
                if (g.has_edge(missing_u, s) && g.has_edge(missing_v, s)) return false;
            }
        }
    }
    if (n == 6) {
        // K33 over every 3+3 split
        for (int mask = 0; mask < 64; ++mask) {
            if (__builtin_popcount(mask) != 3) continue;
            std::vector<int> a, b;
            for (int v = 0; v < 6; ++v) ((mask >> v) & 1 ? a : b).push_back(v);
            bool all = true;
            for (int x : a)
                for (int y : b)
                    if (!g.has_edge(x, y)) all = false;
            if (all) return false;
        }
    }
    return true;
}

// Subdivide edge `idx` through a fresh vertex; planarity-invariant.
inline Graph subdivide_edge(const Graph& g, int idx) {
    std::vector<Edge> edges;
    int mid = g.vertex_count();
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == idx) {
            auto [u, v] = g.edges()[i];
            edges.push_back({std::min(u, mid), std::max(u, mid)});
            edges.push_back({std::min(v, mid), std::max(v, mid)});
        } else {
            edges.push_back(g.edges()[i]);
        }
    }
    return Graph::from_edges(g.vertex_count() + 1, std::move(edges));
}

inline Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph::from_edges(n, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) e.push_back({u, v});
    return Graph::from_edges(a + b, std::move(e));
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        e.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
    return Graph::from_edges(n, std::move(e));
}

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return Graph::from_edges(n, std::move(e));
}

inline Graph grid_graph(int rows, int cols) {
    std::vector<Edge> e;
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
        }
    return Graph::from_edges(rows * cols, std::move(e));
}

inline Graph petersen_graph() {
    std::vector<Edge> e;
    for (int v = 0; v < 5; ++v) {
        e.push_back({std::min(v, (v + 1) % 5), std::max(v, (v + 1) % 5)});
        e.push_back({v, v + 5});
        e.push_back({std::min(v + 5, (v + 2) % 5 + 5), std::max(v + 5, (v + 2) % 5 + 5)});
    }
    return Graph::from_edges(10, std::move(e));
}

// Every labeled graph on n vertices, as edge masks.
inline Graph graph_from_mask(int n, unsigned mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == g.vertex_count();
}

} // namespace orient::testsupport
