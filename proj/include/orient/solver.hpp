#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "orient/graph.hpp"
#include "orient/orientation.hpp"

namespace orient {

// Sorted, duplicate-free positive weights; must contain 1 so that an
// infeasible decide() outcome is meaningful relative to the semi-proper
// orientation number (alphabets like {2,3} are rejected).
struct Alphabet {
    std::vector<int> weights;

    static Alphabet unit() { return Alphabet{{1}}; }
    static Alphabet one_two() { return Alphabet{{1, 2}}; }
    static Alphabet up_to(int w);

    void validate() const;
    int max_weight() const { return weights.back(); }
};

struct SolveLimits {
    size_t max_edges = 40;        // decide / enumerate / closed searches
    size_t oracle_max_edges = 10; // brute-force oracle
};

// Per-edge restriction used when a gadget is verified inside a larger
// context: a frozen boundary edge, or one whose adjacent-sum check is
// carried by the ambient graph instead of this model.
struct EdgeRule {
    std::optional<int> forced_head;
    std::optional<int> forced_weight;
    bool exempt_properness = false;
};

struct VertexRule {
    std::optional<long long> exact_sum;
    std::optional<long long> max_sum;
    std::optional<long long> min_sum;
};

struct Constraints {
    std::unordered_map<int, EdgeRule> edge_rules;   // by edge index
    std::unordered_map<int, VertexRule> vertex_rules; // by vertex
};

// Exhaustive decision: some semi-proper orientation with weights drawn
// from the alphabet, max in-sum <= k, and all constraints satisfied --
// or nullopt as a proof that none exists.
std::optional<WeightedOrientation> decide(const Graph& g, long long k,
                                          const Alphabet& alphabet,
                                          const Constraints& constraints = {},
                                          const SolveLimits& limits = {});

// Every solution exactly once, lexicographic over (direction bits,
// weights) in sorted edge order; direction bit 0 orients min->max.
std::vector<WeightedOrientation> enumerate_optimal(
    const Graph& g, long long k, const Alphabet& alphabet,
    const Constraints& constraints = {}, const SolveLimits& limits = {});

// Streaming variant; return false from the callback to stop early.
void for_each_solution(const Graph& g, long long k, const Alphabet& alphabet,
                       const Constraints& constraints, const SolveLimits& limits,
                       const std::function<bool(const WeightedOrientation&)>& fn);

struct SolveReport {
    long long value = 0;
    WeightedOrientation witness;
};

// Minimum k with decide(g, k, {1,2}) feasible, plus a witness. The
// search starts at max(ceil(m/n), chi(g)-1) when chi is within its cap.
SolveReport semi_proper_number(const Graph& g, const SolveLimits& limits = {});

// Same with the alphabet forced to {1}; in-sums are indegrees.
SolveReport proper_orientation_number(const Graph& g, const SolveLimits& limits = {});

// Independent brute-force oracle: enumerates every direction assignment
// and every weight function into {1..max_weight} and returns the
// minimum achievable max in-sum among semi-proper ones. Tiny instances
// only (limits.oracle_max_edges).
long long oracle_min_max(const Graph& g, int max_weight,
                         const SolveLimits& limits = {},
                         WeightedOrientation* witness_out = nullptr);

} // namespace orient
