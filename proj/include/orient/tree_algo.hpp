#pragma once

#include <vector>

#include "orient/graph.hpp"
#include "orient/orientation.hpp"

namespace orient {

// Depth of every vertex below `root`. Throws validation_error unless
// the graph is a single tree (connected, acyclic). Every edge joins two
// consecutive layers.
std::vector<int> dfs_layering(const Graph& tree, int root);

// Linear-time construction certifying that a forest needs maximum
// in-sum at most 2: edges oriented away from each component root,
// weight 1 on even->odd layer edges and 2 on odd->even ones, so sums
// read root 0, odd layers 1, deeper even layers 2.
WeightedOrientation tree_semi_proper(const Graph& forest);

// Same construction with a chosen root for a connected tree.
WeightedOrientation tree_semi_proper_rooted(const Graph& tree, int root);

// Exact semi-proper orientation number of a forest: 0 without edges, 1
// when (per component) some side of the bipartition consists entirely
// of degree-1 vertices, else 2 (max over components).
struct TreeReport {
    int value = 0;
    WeightedOrientation witness;
};
TreeReport tree_number(const Graph& forest);

} // namespace orient
