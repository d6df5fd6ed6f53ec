#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

// A direction plus positive integer weight for every edge of an
// underlying Graph, indexed by the graph's canonical edge order.
// head_is_second[i] == true means edges()[i] is oriented first->second.
struct WeightedOrientation {
    std::vector<std::uint8_t> head_is_second;
    std::vector<int> weight;

    int head(const Graph& g, int edge_idx) const {
        const auto& e = g.edges()[edge_idx];
        return head_is_second[edge_idx] ? e.second : e.first;
    }
    int tail(const Graph& g, int edge_idx) const {
        const auto& e = g.edges()[edge_idx];
        return head_is_second[edge_idx] ? e.first : e.second;
    }
};

// Per-vertex weighted in-sum; sum over all vertices equals the total
// edge weight.
struct SProfile {
    std::vector<long long> s;
};

// Throws validation_error if wo does not cover exactly g's edges or has
// a weight < 1.
void check_covers(const Graph& g, const WeightedOrientation& wo);

SProfile s_profile(const Graph& g, const WeightedOrientation& wo);

struct AdjacentViolation {
    int u = -1;
    int v = -1;
};

// First adjacent pair (in sorted edge order) with equal in-sums, or
// nullopt when the orientation is semi-proper.
std::optional<AdjacentViolation> first_violation(const Graph& g,
                                                 const WeightedOrientation& wo);

bool is_semi_proper(const Graph& g, const WeightedOrientation& wo);

long long max_s(const Graph& g, const WeightedOrientation& wo);

// Orientation text format: one line "a <tail> <head> <weight>" per edge,
// in sorted edge order. Round-trips with parse_orientation.
std::string serialize_orientation(const Graph& g, const WeightedOrientation& wo);
WeightedOrientation parse_orientation(const Graph& g, const std::string& text);

} // namespace orient
