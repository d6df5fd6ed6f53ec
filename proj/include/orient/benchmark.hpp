#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orient/solver.hpp"

namespace orient {

enum class BenchFamily { random, random_bipartite, trees };

BenchFamily parse_bench_family(const std::string& s);
std::string to_string(BenchFamily f);

struct BenchmarkRow {
    int index = 0;
    int n = 0;
    int m = 0;
    bool skipped = false;  // instance above the search cap
    long long semi_proper = 0;
    long long proper = 0;
    long long gap = 0;
};

struct BenchmarkTable {
    std::vector<BenchmarkRow> rows;
    long long max_gap = 0;
};

// Probes the gap between the proper and semi-proper orientation numbers
// on a seeded family; identical parameters give identical tables. Rows
// above the solver cap are marked skipped and the run continues.
BenchmarkTable benchmark_gap(BenchFamily family, int count, int min_n, int max_n,
                             double edge_prob, std::uint64_t seed,
                             const SolveLimits& limits = {});

} // namespace orient
