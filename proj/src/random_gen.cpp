#include "orient/random_gen.hpp"

#include <algorithm>

namespace orient {

Graph erdos_renyi(int n, double edge_prob, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < edge_prob) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph random_bipartite(int n, double edge_prob, Rng& rng) {
    int half = n / 2;
    std::vector<Edge> edges;
    for (int u = 0; u < half; ++u)
        for (int v = half; v < n; ++v)
            if (rng.uniform01() < edge_prob) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph random_tree(int n, Rng& rng) {
    if (n <= 1) return Graph::from_edges(std::max(n, 0), {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});

    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = rng.uniform_int(0, n - 1);

    std::vector<int> degree(n, 1);
    for (int x : pruefer) degree[x]++;

    std::vector<Edge> edges;
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : pruefer) {
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        --degree[leaf];
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) (a == -1 ? a : b) = v;
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph::from_edges(n, std::move(edges));
}

} // namespace orient
