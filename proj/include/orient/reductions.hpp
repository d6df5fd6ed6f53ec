#pragma once

#include <array>
#include <vector>

#include "orient/cnf.hpp"
#include "orient/gadgets.hpp"
#include "orient/graph.hpp"
#include "orient/orientation.hpp"

namespace orient {

enum class ReductionKind {
    H,  // planar target, unit-weight optimality encodes satisfiability
    G,  // planar bipartite target, orientation number 2 encodes 1-in-3
};

struct ReductionOutput {
    Graph graph;
    std::vector<int> var_vertex;              // labeled x_<i>
    std::vector<int> neg_vertex;              // labeled neg_x_<i>
    std::vector<std::array<int, 3>> clause_ports;  // labeled c_<m>^<j>
    std::vector<int> var_copy_base;           // first vertex of each variable gadget
    std::vector<int> clause_copy_base;        // first vertex of each clause gadget
};

// One variable gadget per variable, one clause gadget per clause, plus
// a boundary edge from each clause's literal vertices into its three
// ports. Throws validation_error unless validate_instance passes for
// the matching flavor.
ReductionOutput build_H(const CnfInstance& f);  // flavor: type2
ReductionOutput build_G(const CnfInstance& f);  // flavor: cubic1in3

// Reads the truth assignment off an optimal orientation of a built
// construction: for H a variable is true when its vertex sums to 1, for
// G when it sums to 2. Checks the orientation is semi-proper with
// maximum 2 (H additionally all weights 1), and that the extracted
// assignment satisfies the clause structure recovered from the labels
// (H: every clause; G: exactly one true literal per clause).
std::vector<bool> extract_assignment(const Graph& g, const WeightedOrientation& wo,
                                     ReductionKind which);

// Builds the complete witness orientation from a satisfying assignment:
// boundary edges enter the clause ports with weight 1 and every gadget
// copy is completed from the catalog. The result is verified
// semi-proper with maximum in-sum 2 and unit weights before returning.
WeightedOrientation assignment_to_orientation(const CnfInstance& f,
                                              const std::vector<bool>& assignment,
                                              ReductionKind which);

} // namespace orient
