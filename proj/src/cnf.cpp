#include "orient/cnf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace orient {

CnfInstance parse_dimacs(const std::string& text, CnfFlavor flavor) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int nv = 0, nc = 0;
    std::vector<int> pending;
    CnfInstance f;
    f.flavor = flavor;

    auto fail = [&](const std::string& msg) {
        throw parse_error("line " + std::to_string(lineno) + ": " + msg);
    };
    auto close_clause = [&]() {
        if (pending.empty()) return;
        if (pending.size() != 3) fail("clause must have exactly 3 literals");
        std::array<Literal, 3> cl;
        for (int i = 0; i < 3; ++i) {
            int lit = pending[i];
            int var = std::abs(lit) - 1;
            if (var < 0 || var >= nv) fail("literal out of range");
            cl[i] = Literal{var, lit < 0};
        }
        f.clauses.push_back(cl);
        pending.clear();
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
                fail("bad 'p cnf <vars> <clauses>' header");
            have_header = true;
            continue;
        }
        if (!have_header) fail("clause before header");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0)
                close_clause();
            else
                pending.push_back(lit);
        }
        if (ls.fail() && !ls.eof()) fail("bad literal");
    }
    if (!have_header) throw parse_error("missing 'p cnf' header");
    if (!pending.empty()) throw parse_error("unterminated clause");
    if (static_cast<int>(f.clauses.size()) != nc)
        throw parse_error("header declares " + std::to_string(nc) +
                          " clauses, found " + std::to_string(f.clauses.size()));
    f.num_vars = nv;
    return f;
}

std::string serialize_dimacs(const CnfInstance& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& cl : f.clauses) {
        for (const auto& lit : cl)
            out << (lit.negated ? -(lit.var + 1) : lit.var + 1) << " ";
        out << "0\n";
    }
    return out.str();
}

Graph incidence_graph(const CnfInstance& f) {
    std::vector<Edge> edges;
    auto add = [&](int a, int b) {
        edges.emplace_back(std::min(a, b), std::max(a, b));
    };
    if (f.flavor == CnfFlavor::type2) {
        int k = static_cast<int>(f.clauses.size());
        // clause j -> j, x_i -> k+i, neg x_i -> k+n+i
        for (int i = 0; i < f.num_vars; ++i) add(k + i, k + f.num_vars + i);
        for (int j = 0; j < k; ++j)
            for (const auto& lit : f.clauses[j])
                add(j, k + (lit.negated ? f.num_vars : 0) + lit.var);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return Graph::from_edges(k + 2 * f.num_vars, std::move(edges));
    }
    // variable i -> i, clause j -> n+j
    for (size_t j = 0; j < f.clauses.size(); ++j)
        for (const auto& lit : f.clauses[j]) add(lit.var, f.num_vars + static_cast<int>(j));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(f.num_vars + static_cast<int>(f.clauses.size()),
                             std::move(edges));
}

ValidationReport validate_instance(const CnfInstance& f) {
    ValidationReport r;
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        const auto& cl = f.clauses[j];
        for (const auto& lit : cl)
            if (lit.var < 0 || lit.var >= f.num_vars)
                r.diagnostics.push_back("clause " + std::to_string(j) +
                                        ": variable out of range");
        std::set<Literal> uniq(cl.begin(), cl.end());
        if (uniq.size() != 3)
            r.diagnostics.push_back("clause " + std::to_string(j) +
                                    ": repeated literal");
    }
    if (f.flavor == CnfFlavor::cubic1in3) {
        std::vector<int> occurrences(f.num_vars, 0);
        for (const auto& cl : f.clauses)
            for (const auto& lit : cl) {
                if (lit.negated)
                    r.diagnostics.push_back("negated literal in a monotone instance");
                if (lit.var >= 0 && lit.var < f.num_vars) occurrences[lit.var]++;
            }
        for (int i = 0; i < f.num_vars; ++i)
            if (occurrences[i] != 3)
                r.diagnostics.push_back("occurrence count: variable " +
                                        std::to_string(i + 1) + " appears " +
                                        std::to_string(occurrences[i]) +
                                        " times, expected 3");
    }
    if (r.diagnostics.empty() && !is_planar(incidence_graph(f)))
        r.diagnostics.push_back("incidence graph is not planar");
    r.ok = r.diagnostics.empty();
    return r;
}

bool satisfies(const CnfInstance& f, const std::vector<bool>& assignment) {
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (const auto& lit : cl)
            if (assignment[lit.var] != lit.negated) sat = true;
        if (!sat) return false;
    }
    return true;
}

bool satisfies_one_in_three(const CnfInstance& f, const std::vector<bool>& assignment) {
    for (const auto& cl : f.clauses) {
        int trues = 0;
        for (const auto& lit : cl)
            if (assignment[lit.var] != lit.negated) ++trues;
        if (trues != 1) return false;
    }
    return true;
}

namespace {

template <typename Pred>
bool brute_force(const CnfInstance& f, std::vector<bool>* witness, Pred pred) {
    if (f.num_vars > 24) throw size_error("truth table beyond 24 variables");
    for (std::uint64_t mask = 0; mask < (1ULL << f.num_vars); ++mask) {
        std::vector<bool> a(f.num_vars);
        for (int i = 0; i < f.num_vars; ++i) a[i] = (mask >> i) & 1;
        if (pred(f, a)) {
            if (witness) *witness = a;
            return true;
        }
    }
    return false;
}

} // namespace

bool brute_force_satisfiable(const CnfInstance& f, std::vector<bool>* witness) {
    return brute_force(f, witness, satisfies);
}

bool brute_force_one_in_three(const CnfInstance& f, std::vector<bool>* witness) {
    return brute_force(f, witness, satisfies_one_in_three);
}

} // namespace orient
