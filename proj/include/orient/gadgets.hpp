#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "orient/graph.hpp"
#include "orient/solver.hpp"

namespace orient {

enum class GadgetName { T, K, F1, F2, H, Q, L, S };

std::string to_string(GadgetName name);
GadgetName parse_gadget_name(const std::string& s);

struct GadgetCatalogEntry {
    GadgetName name;
    Graph graph;                        // port vertices labeled
    std::map<std::string, int> ports;   // label -> vertex
    std::vector<int> properties;        // contracted property ids (6..14)
    bool reconstructed = false;         // adjacency not pinned by prose alone
};

// Returns the catalog entry; throws contract_error on an unknown name.
GadgetCatalogEntry gadget(GadgetName name);

struct GadgetCheck {
    std::string name;
    std::string method;   // "enumerate", "profile-decide", "skeleton-compose", ...
    bool passed = false;
    std::string detail;   // counterexample or note on failure
};

struct GadgetReport {
    GadgetName name;
    bool all_passed = false;
    std::vector<GadgetCheck> checks;
};

// Checks every contracted property of the entry over the complete
// family of optimal orientations: by direct enumeration where the
// gadget is small, and by exhaustive port-profile decisions (or
// skeleton models whose replaced blocks carry separately verified port
// contracts) where it is not. Boundary-edge conditions are modeled as
// forced pendant edges.
GadgetReport verify_gadget(const GadgetCatalogEntry& entry,
                           const SolveLimits& limits = SolveLimits{
                               .max_edges = 128, .oracle_max_edges = 10});

// Entry with one edge removed, for mutation-sensitivity tests.
GadgetCatalogEntry remove_gadget_edge(const GadgetCatalogEntry& entry,
                                      int edge_index);

// Deterministic unit-weight completions over the catalog graphs, used
// to assemble reduction witnesses. Port sums are the totals including
// the boundary edge entering each port with weight 1. They throw
// internal_error when no completion exists, which would mean a broken
// catalog reconstruction.
WeightedOrientation complete_t_gadget(bool variable_true);
WeightedOrientation complete_k_gadget(const std::array<long long, 3>& port_sums);
WeightedOrientation complete_h_gadget(bool variable_true);
WeightedOrientation complete_s_gadget(const std::array<long long, 3>& port_sums);

} // namespace orient
