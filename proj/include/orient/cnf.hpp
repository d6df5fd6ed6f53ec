#pragma once

#include <array>
#include <string>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

struct Literal {
    int var = 0;  // 0-based
    bool negated = false;

    bool operator==(const Literal&) const = default;
    bool operator<(const Literal& o) const {
        return var < o.var || (var == o.var && negated < o.negated);
    }
};

enum class CnfFlavor {
    type2,      // clauses over literals; incidence over C + X + (neg X) planar
    cubic1in3,  // monotone, every variable in exactly three clauses
};

struct CnfInstance {
    int num_vars = 0;
    std::vector<std::array<Literal, 3>> clauses;
    CnfFlavor flavor = CnfFlavor::type2;
};

// Standard DIMACS CNF ("p cnf <vars> <clauses>", clauses of signed
// integers terminated by 0). Every clause must have exactly three
// literals.
CnfInstance parse_dimacs(const std::string& text, CnfFlavor flavor);
std::string serialize_dimacs(const CnfInstance& f);

// For type2: vertices are clauses, then x_i, then neg x_i; clause
// adjacent to its literal vertices, x_i adjacent to neg x_i. For
// cubic1in3: vertices are variables then clauses.
Graph incidence_graph(const CnfInstance& f);

struct ValidationReport {
    bool ok = false;
    std::vector<std::string> diagnostics;
};

// Flavor-specific structural checks including exact planarity of the
// incidence graph.
ValidationReport validate_instance(const CnfInstance& f);

// Truth-table checks for desk-scale instances.
bool brute_force_satisfiable(const CnfInstance& f, std::vector<bool>* witness = nullptr);
bool brute_force_one_in_three(const CnfInstance& f, std::vector<bool>* witness = nullptr);

bool satisfies(const CnfInstance& f, const std::vector<bool>& assignment);
bool satisfies_one_in_three(const CnfInstance& f, const std::vector<bool>& assignment);

} // namespace orient
