#pragma once

#include <cstdint>
#include <random>

#include "orient/graph.hpp"

namespace orient {

// Deterministic source for every seeded family in the toolkit.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform_int(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }
    double uniform01() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(eng_);
    }

  private:
    std::mt19937_64 eng_;
};

Graph erdos_renyi(int n, double edge_prob, Rng& rng);

// Random bipartition sides of size floor(n/2) and ceil(n/2); each cross
// pair kept with the given probability.
Graph random_bipartite(int n, double edge_prob, Rng& rng);

// Uniform labeled tree by random Pruefer sequence (n >= 1).
Graph random_tree(int n, Rng& rng);

} // namespace orient
