#include "orient/tree_algo.hpp"

#include <algorithm>
#include <vector>

namespace orient {

namespace {

bool is_forest(const Graph& g, std::vector<int>* component = nullptr) {
    std::vector<int> comp(g.vertex_count(), -1);
    int ncomp = 0;
    long long tree_edges = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    ++tree_edges;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    if (component) *component = comp;
    // acyclic iff every edge is a tree edge of the traversal
    return tree_edges == g.edge_count();
}

// DFS depths inside one component, scanning neighbors in adjacency
// order from `root`. Depth equals distance since the graph is acyclic.
void fill_depths(const Graph& g, int root, std::vector<int>& depth) {
    depth[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (depth[w] == -1) {
                depth[w] = depth[v] + 1;
                stack.push_back(w);
            }
        }
    }
}

WeightedOrientation orient_down(const Graph& g, const std::vector<int>& depth) {
    WeightedOrientation wo;
    wo.head_is_second.assign(g.edge_count(), 0);
    wo.weight.assign(g.edge_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        int parent = depth[u] < depth[v] ? u : v;
        wo.head_is_second[i] = parent == u ? 1 : 0;
        wo.weight[i] = depth[parent] % 2 == 0 ? 1 : 2;
    }
    return wo;
}

} // namespace

std::vector<int> dfs_layering(const Graph& tree, int root) {
    if (root < 0 || root >= tree.vertex_count())
        throw contract_error("dfs_layering: root out of range");
    std::vector<int> comp;
    if (!is_forest(tree, &comp))
        throw validation_error("dfs_layering: graph has a cycle");
    std::vector<int> depth(tree.vertex_count(), -1);
    fill_depths(tree, root, depth);
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (depth[v] == -1)
            throw validation_error("dfs_layering: graph is not connected");
    return depth;
}

WeightedOrientation tree_semi_proper_rooted(const Graph& tree, int root) {
    return orient_down(tree, dfs_layering(tree, root));
}

WeightedOrientation tree_semi_proper(const Graph& forest) {
    if (!is_forest(forest))
        throw validation_error("tree_semi_proper: graph has a cycle");
    std::vector<int> depth(forest.vertex_count(), -1);
    for (int v = 0; v < forest.vertex_count(); ++v)
        if (depth[v] == -1) fill_depths(forest, v, depth);
    return orient_down(forest, depth);
}

TreeReport tree_number(const Graph& forest) {
    std::vector<int> comp;
    if (!is_forest(forest, &comp))
        throw validation_error("tree_number: graph has a cycle");
    if (forest.edge_count() == 0) {
        TreeReport r;
        r.witness.head_is_second.clear();
        r.witness.weight.clear();
        return r;
    }

    int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
    // value 1 iff every component with edges has a bipartition side made
    // of degree-1 vertices only; a sum-1 vertex must absorb its whole
    // neighborhood, so that side is exactly the leaves
    BipartiteResult bip = is_bipartite(forest);
    std::vector<std::array<bool, 2>> side_all_leaves(ncomp, {true, true});
    std::vector<bool> has_edge(ncomp, false);
    for (int v = 0; v < forest.vertex_count(); ++v)
        if (forest.degree(v) > 1) side_all_leaves[comp[v]][bip.coloring[v]] = false;
    for (const auto& [u, v] : forest.edges()) has_edge[comp[u]] = true;

    bool all_one = true;
    std::vector<int> leaf_side(ncomp, -1);
    for (int c = 0; c < ncomp; ++c) {
        if (!has_edge[c]) continue;
        if (side_all_leaves[c][1])
            leaf_side[c] = 1;
        else if (side_all_leaves[c][0])
            leaf_side[c] = 0;
        else
            all_one = false;
    }

    TreeReport r;
    if (all_one) {
        r.value = 1;
        r.witness.head_is_second.assign(forest.edge_count(), 0);
        r.witness.weight.assign(forest.edge_count(), 1);
        for (int i = 0; i < forest.edge_count(); ++i) {
            auto [u, v] = forest.edges()[i];
            int head = bip.coloring[v] == leaf_side[comp[v]] ? v : u;
            r.witness.head_is_second[i] = head == v ? 1 : 0;
        }
    } else {
        r.value = 2;
        r.witness = tree_semi_proper(forest);
    }
    return r;
}

} // namespace orient
