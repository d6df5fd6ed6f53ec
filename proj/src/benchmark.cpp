#include "orient/benchmark.hpp"

#include <algorithm>

#include "orient/random_gen.hpp"

namespace orient {

BenchFamily parse_bench_family(const std::string& s) {
    if (s == "random") return BenchFamily::random;
    if (s == "random-bipartite") return BenchFamily::random_bipartite;
    if (s == "trees") return BenchFamily::trees;
    throw validation_error("unknown family '" + s + "'");
}

std::string to_string(BenchFamily f) {
    switch (f) {
        case BenchFamily::random: return "random";
        case BenchFamily::random_bipartite: return "random-bipartite";
        case BenchFamily::trees: return "trees";
    }
    throw contract_error("bad family");
}

BenchmarkTable benchmark_gap(BenchFamily family, int count, int min_n, int max_n,
                             double edge_prob, std::uint64_t seed,
                             const SolveLimits& limits) {
    if (min_n < 1 || max_n < min_n) throw validation_error("bad size range");
    Rng rng(seed);
    BenchmarkTable table;
    for (int i = 0; i < count; ++i) {
        int n = rng.uniform_int(min_n, max_n);
        Graph g;
        switch (family) {
            case BenchFamily::random: g = erdos_renyi(n, edge_prob, rng); break;
            case BenchFamily::random_bipartite:
                g = random_bipartite(n, edge_prob, rng);
                break;
            case BenchFamily::trees: g = random_tree(n, rng); break;
        }
        BenchmarkRow row;
        row.index = i;
        row.n = g.vertex_count();
        row.m = g.edge_count();
        try {
            row.semi_proper = semi_proper_number(g, limits).value;
            row.proper = proper_orientation_number(g, limits).value;
            row.gap = row.proper - row.semi_proper;
        } catch (const size_error&) {
            row.skipped = true;
        }
        if (!row.skipped) table.max_gap = std::max(table.max_gap, row.gap);
        table.rows.push_back(row);
    }
    return table;
}

} // namespace orient
