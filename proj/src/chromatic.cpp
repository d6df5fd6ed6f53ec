// Exact vertex coloring: iterate k upward from a greedy-clique lower
// bound, deciding each k by backtracking over vertices in
// degree-descending order.

#include <algorithm>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

namespace {

// Greedy clique around each vertex; a valid lower bound for chi.
int greedy_clique_bound(const Graph& g) {
    int best = g.vertex_count() > 0 ? 1 : 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> clique{s};
        for (int w : g.neighbors(s)) {
            bool ok = true;
            for (int c : clique)
                if (c != w && !g.has_edge(c, w)) { ok = false; break; }
            if (ok) clique.push_back(w);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

bool colorable(const Graph& g, const std::vector<int>& order, int k,
               std::vector<int>& color, size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    int used_max = 0;
    for (size_t i = 0; i < pos; ++i) used_max = std::max(used_max, color[order[i]] + 1);
    // symmetry break: never open more than one new color
    int limit = std::min(k, used_max + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (color[w] == c) { ok = false; break; }
        if (!ok) continue;
        color[v] = c;
        if (colorable(g, order, k, color, pos + 1)) return true;
        color[v] = -1;
    }
    return false;
}

} // namespace

int chromatic_number(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw size_error("chromatic_number: " + std::to_string(g.vertex_count()) +
                         " vertices exceed cap " + std::to_string(cap) +
                         "; skip the chi-based lower bound");
    if (g.vertex_count() == 0) return 0;
    if (g.edge_count() == 0) return 1;

    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });

    for (int k = greedy_clique_bound(g); k <= g.vertex_count(); ++k) {
        std::vector<int> color(g.vertex_count(), -1);
        if (colorable(g, order, k, color, 0)) return k;
    }
    throw internal_error("chromatic_number: no coloring found up to n colors");
}

} // namespace orient
