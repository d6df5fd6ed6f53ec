#include "orient/reductions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "orient/gadget_detail.hpp"

namespace orient {

using detail::GraphSketch;

namespace {

void require_valid(const CnfInstance& f, CnfFlavor flavor) {
    if (f.flavor != flavor)
        throw contract_error("instance flavor does not match the construction");
    ValidationReport r = validate_instance(f);
    if (!r.ok) {
        std::ostringstream msg;
        msg << "invalid instance:";
        for (const auto& d : r.diagnostics) msg << " " << d << ";";
        throw validation_error(msg.str());
    }
}

int literal_vertex(const ReductionOutput& out, const Literal& lit) {
    return lit.negated ? out.neg_vertex[lit.var] : out.var_vertex[lit.var];
}

} // namespace

ReductionOutput build_H(const CnfInstance& f) {
    require_valid(f, CnfFlavor::type2);
    GraphSketch sk;
    ReductionOutput out;
    for (int i = 0; i < f.num_vars; ++i) {
        out.var_copy_base.push_back(sk.n);
        auto bp = detail::add_t(sk);
        sk.labels[bp.x] = "x_" + std::to_string(i + 1);
        sk.labels[bp.neg_x] = "neg_x_" + std::to_string(i + 1);
        out.var_vertex.push_back(bp.x);
        out.neg_vertex.push_back(bp.neg_x);
    }
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        out.clause_copy_base.push_back(sk.n);
        auto bp = detail::add_k(sk);
        for (int m = 0; m < 3; ++m)
            sk.labels[bp.ports[m]] = "c_" + std::to_string(m + 1) + "^" +
                                     std::to_string(j + 1);
        out.clause_ports.push_back(bp.ports);
    }
    for (size_t j = 0; j < f.clauses.size(); ++j)
        for (int m = 0; m < 3; ++m)
            sk.add_edge(literal_vertex(out, f.clauses[j][m]),
                        out.clause_ports[j][m]);
    out.graph = sk.build();
    return out;
}

ReductionOutput build_G(const CnfInstance& f) {
    require_valid(f, CnfFlavor::cubic1in3);
    GraphSketch sk;
    ReductionOutput out;
    for (int i = 0; i < f.num_vars; ++i) {
        out.var_copy_base.push_back(sk.n);
        auto bp = detail::add_h(sk);
        sk.labels[bp.x] = "x_" + std::to_string(i + 1);
        sk.labels[bp.neg_x] = "neg_x_" + std::to_string(i + 1);
        out.var_vertex.push_back(bp.x);
        out.neg_vertex.push_back(bp.neg_x);
    }
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        out.clause_copy_base.push_back(sk.n);
        auto bp = detail::add_s(sk);
        for (int m = 0; m < 3; ++m)
            sk.labels[bp.ports[m]] = "c_" + std::to_string(m + 1) + "^" +
                                     std::to_string(j + 1);
        out.clause_ports.push_back(bp.ports);
    }
    for (size_t j = 0; j < f.clauses.size(); ++j)
        for (int m = 0; m < 3; ++m)
            sk.add_edge(out.var_vertex[f.clauses[j][m].var],
                        out.clause_ports[j][m]);
    out.graph = sk.build();
    return out;
}

namespace {

struct LabeledStructure {
    int num_vars = 0;
    std::vector<int> var_vertex;
    // clause index -> three (position, port vertex, literal vertex)
    std::vector<std::array<std::pair<int, int>, 3>> clauses;  // (port, literal)
};

LabeledStructure read_labels(const Graph& g) {
    LabeledStructure st;
    std::map<int, int> var_of_vertex;   // literal vertex -> var (x and neg x)
    std::map<int, bool> vertex_negated;
    std::map<std::pair<int, int>, int> port_at;  // (clause, position) -> vertex
    int num_clauses = 0;
    for (const auto& [v, label] : g.labels()) {
        if (label.rfind("x_", 0) == 0) {
            int var = std::stoi(label.substr(2)) - 1;
            st.num_vars = std::max(st.num_vars, var + 1);
            if (static_cast<int>(st.var_vertex.size()) < var + 1)
                st.var_vertex.resize(var + 1, -1);
            st.var_vertex[var] = v;
            var_of_vertex[v] = var;
            vertex_negated[v] = false;
        } else if (label.rfind("neg_x_", 0) == 0) {
            int var = std::stoi(label.substr(6)) - 1;
            var_of_vertex[v] = var;
            vertex_negated[v] = true;
        } else if (label.rfind("c_", 0) == 0) {
            auto caret = label.find('^');
            if (caret == std::string::npos)
                throw validation_error("malformed port label " + label);
            int pos = std::stoi(label.substr(2, caret - 2)) - 1;
            int clause = std::stoi(label.substr(caret + 1)) - 1;
            port_at[{clause, pos}] = v;
            num_clauses = std::max(num_clauses, clause + 1);
        }
    }
    for (int v : st.var_vertex)
        if (v < 0) throw validation_error("missing variable label");
    st.clauses.resize(num_clauses);
    for (int j = 0; j < num_clauses; ++j) {
        for (int m = 0; m < 3; ++m) {
            auto it = port_at.find({j, m});
            if (it == port_at.end())
                throw validation_error("missing port label for clause " +
                                       std::to_string(j + 1));
            int port = it->second;
            int lit = -1;
            for (int w : g.neighbors(port))
                if (var_of_vertex.count(w)) {
                    if (lit != -1)
                        throw validation_error("port with two literal neighbors");
                    lit = w;
                }
            if (lit == -1)
                throw validation_error("port without a literal neighbor");
            st.clauses[j][m] = {port, lit};
        }
    }
    return st;
}

} // namespace

std::vector<bool> extract_assignment(const Graph& g, const WeightedOrientation& wo,
                                     ReductionKind which) {
    if (!is_semi_proper(g, wo))
        throw contract_error("extract_assignment: orientation is not semi-proper");
    if (max_s(g, wo) != 2)
        throw contract_error("extract_assignment: maximum in-sum is not 2");
    for (int w : wo.weight) {
        if (which == ReductionKind::H && w != 1)
            throw contract_error("extract_assignment: expected unit weights");
        if (w > 2)
            throw contract_error("extract_assignment: weight above 2");
    }

    LabeledStructure st = read_labels(g);
    SProfile p = s_profile(g, wo);
    std::vector<bool> assignment(st.num_vars);
    for (int i = 0; i < st.num_vars; ++i) {
        long long s = p.s[st.var_vertex[i]];
        if (s != 1 && s != 2)
            throw contract_error("variable vertex sum outside {1,2}");
        assignment[i] = which == ReductionKind::H ? s == 1 : s == 2;
    }

    // the extracted assignment must satisfy the clause structure
    for (size_t j = 0; j < st.clauses.size(); ++j) {
        int trues = 0;
        for (const auto& [port, lit] : st.clauses[j]) {
            long long s = p.s[lit];
            if (which == ReductionKind::H ? s == 1 : s == 2) ++trues;
        }
        bool ok = which == ReductionKind::H ? trues >= 1 : trues == 1;
        if (!ok)
            throw internal_error("extracted assignment violates clause " +
                                 std::to_string(j + 1));
    }
    return assignment;
}

namespace {

// Copies a completed catalog gadget into the global orientation; the
// copy occupies a contiguous vertex block starting at `base`.
void place_copy(const Graph& catalog_graph, const WeightedOrientation& completed,
                int base, const Graph& g, WeightedOrientation& out) {
    for (int i = 0; i < catalog_graph.edge_count(); ++i) {
        auto [a, b] = catalog_graph.edges()[i];
        int gi = g.edge_index(a + base, b + base);
        if (gi < 0) throw internal_error("gadget copy is not aligned");
        int head = completed.head(catalog_graph, i) + base;
        out.head_is_second[gi] = head == g.edges()[gi].second ? 1 : 0;
        out.weight[gi] = completed.weight[i];
    }
}

} // namespace

WeightedOrientation assignment_to_orientation(const CnfInstance& f,
                                              const std::vector<bool>& assignment,
                                              ReductionKind which) {
    if (static_cast<int>(assignment.size()) != f.num_vars)
        throw contract_error("assignment size mismatch");
    bool pre = which == ReductionKind::H ? satisfies(f, assignment)
                                         : satisfies_one_in_three(f, assignment);
    if (!pre)
        throw contract_error("assignment does not satisfy the instance");

    ReductionOutput out =
        which == ReductionKind::H ? build_H(f) : build_G(f);
    const Graph& g = out.graph;
    WeightedOrientation wo;
    wo.head_is_second.assign(g.edge_count(), 0);
    wo.weight.assign(g.edge_count(), 0);

    // boundary edges always run from the literal into the clause port
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        for (int m = 0; m < 3; ++m) {
            int lit = which == ReductionKind::H
                          ? literal_vertex(out, f.clauses[j][m])
                          : out.var_vertex[f.clauses[j][m].var];
            int port = out.clause_ports[j][m];
            int gi = g.edge_index(lit, port);
            wo.head_is_second[gi] = port == g.edges()[gi].second ? 1 : 0;
            wo.weight[gi] = 1;
        }
    }

    const Graph& var_catalog = gadget(which == ReductionKind::H ? GadgetName::T
                                                                : GadgetName::H).graph;
    const Graph& clause_catalog = gadget(which == ReductionKind::H ? GadgetName::K
                                                                   : GadgetName::S).graph;
    for (int i = 0; i < f.num_vars; ++i) {
        WeightedOrientation completed = which == ReductionKind::H
                                            ? complete_t_gadget(assignment[i])
                                            : complete_h_gadget(assignment[i]);
        place_copy(var_catalog, completed, out.var_copy_base[i], g, wo);
    }
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        std::array<long long, 3> targets{};
        for (int m = 0; m < 3; ++m) {
            const Literal& lit = f.clauses[j][m];
            bool lit_true = assignment[lit.var] != lit.negated;
            // a port never matches its literal vertex: sums are 3 - s(lit)
            if (which == ReductionKind::H)
                targets[m] = lit_true ? 2 : 1;
            else
                targets[m] = lit_true ? 1 : 2;
        }
        WeightedOrientation completed = which == ReductionKind::H
                                            ? complete_k_gadget(targets)
                                            : complete_s_gadget(targets);
        place_copy(clause_catalog, completed, out.clause_copy_base[j], g, wo);
    }

    if (g.edge_count() > 0) {
        if (!is_semi_proper(g, wo))
            throw internal_error("assembled witness is not semi-proper");
        if (max_s(g, wo) != 2)
            throw internal_error("assembled witness does not attain maximum 2");
        for (int w : wo.weight)
            if (w != 1) throw internal_error("assembled witness is not unit-weight");
    }
    return wo;
}

} // namespace orient
