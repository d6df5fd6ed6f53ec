#pragma once

#include <vector>

#include "orient/graph.hpp"
#include "orient/orientation.hpp"

namespace orient {

// Repair progress measure: t = number of edges with weight > 2, b = sum
// of their weights. Every rewrite strictly decreases (t, b)
// lexicographically, which bounds the repair loop.
struct BadEdgeLedger {
    long long t = 0;
    long long b = 0;

    bool operator==(const BadEdgeLedger&) const = default;
    bool lex_less(const BadEdgeLedger& o) const {
        return t < o.t || (t == o.t && b < o.b);
    }
};

BadEdgeLedger bad_edge_ledger(const Graph& g, const WeightedOrientation& wo);

// Vertex of minimum in-sum among all vertices reachable from v by a
// directed path (v itself included); ties broken by smallest index.
int reachable_min_vertex(const Graph& g, const WeightedOrientation& wo, int v);

// Rewrite applied when the head v of a heavy edge attains the minimum
// in-sum over its reachability closure: all k in-edges of v are
// reassigned weights in {1,2} summing to the smallest q with
// k <= q <= 2k that avoids every in-neighbor's sum. Preconditions
// (checked): the edge has weight > 2, every other in-edge of v has
// weight exactly 2, and v attains the reachable minimum. Directions
// are unchanged, only s[v] moves, and it strictly drops.
WeightedOrientation case1_rebalance(const Graph& g, const WeightedOrientation& wo,
                                    int bad_edge);

// Rewrite applied when some p reachable from v has a strictly smaller
// in-sum: the shortest directed path v..p is reversed with its weights
// rotated one step (every sum along the path is preserved), the heavy
// edge drops to weight-1 less, and depending on how small s[p] is
// either two unit in-edges of p absorb the displaced weight (all sums
// preserved) or the remaining in-edges of p are rebalanced into {1,2}
// summing to an admissible q with k-1 <= q <= 2k-2.
WeightedOrientation case2_reverse_path(const Graph& g,
                                       const WeightedOrientation& wo,
                                       int bad_edge, int p);

struct NormalizeStep {
    enum class Kind {
        weight_shift,       // move one unit from the heavy edge onto a unit sibling
        weight_merge,       // fold the heavy edge into a heavier sibling
        rebalance,          // case 1 pigeonhole reassignment
        path_rotate,        // case 2, sums preserved pointwise
        path_rebalance,     // case 2 with in-edge reassignment at p
    };
    Kind kind;
    int edge;  // heavy edge the step was fired for
    BadEdgeLedger after;
};

struct NormalizeStats {
    std::vector<NormalizeStep> steps;
};

// Transforms a semi-proper orientation with arbitrary positive weights
// into one with every weight in {1,2}, never increasing the maximum
// in-sum. Semi-properness, the max bound, and the (t,b) descent are
// re-checked after every step; a violation throws internal_error.
WeightedOrientation normalize_to_12(const Graph& g, const WeightedOrientation& wo,
                                    NormalizeStats* stats = nullptr);

} // namespace orient
