#include "orient/orientation.hpp"

#include <algorithm>
#include <sstream>

namespace orient {

void check_covers(const Graph& g, const WeightedOrientation& wo) {
    size_t m = g.edges().size();
    if (wo.head_is_second.size() != m || wo.weight.size() != m)
        throw validation_error("orientation does not cover the edge set");
    for (size_t i = 0; i < m; ++i)
        if (wo.weight[i] < 1)
            throw validation_error("edge weight must be positive");
}

SProfile s_profile(const Graph& g, const WeightedOrientation& wo) {
    check_covers(g, wo);
    SProfile p;
    p.s.assign(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i)
        p.s[wo.head(g, i)] += wo.weight[i];
    return p;
}

std::optional<AdjacentViolation> first_violation(const Graph& g,
                                                 const WeightedOrientation& wo) {
    SProfile p = s_profile(g, wo);
    for (const auto& [u, v] : g.edges())
        if (p.s[u] == p.s[v]) return AdjacentViolation{u, v};
    return std::nullopt;
}

bool is_semi_proper(const Graph& g, const WeightedOrientation& wo) {
    return !first_violation(g, wo).has_value();
}

long long max_s(const Graph& g, const WeightedOrientation& wo) {
    SProfile p = s_profile(g, wo);
    long long m = 0;
    for (long long x : p.s) m = std::max(m, x);
    return m;
}

std::string serialize_orientation(const Graph& g, const WeightedOrientation& wo) {
    check_covers(g, wo);
    std::ostringstream out;
    for (int i = 0; i < g.edge_count(); ++i)
        out << "a " << wo.tail(g, i) << " " << wo.head(g, i) << " "
            << wo.weight[i] << "\n";
    return out.str();
}

WeightedOrientation parse_orientation(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    WeightedOrientation wo;
    wo.head_is_second.assign(g.edge_count(), 0);
    wo.weight.assign(g.edge_count(), 0);
    std::vector<bool> seen(g.edge_count(), false);

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag != "a")
            throw parse_error("line " + std::to_string(lineno) +
                              ": expected 'a <tail> <head> <weight>'");
        int tail, head, w;
        if (!(ls >> tail >> head >> w))
            throw parse_error("line " + std::to_string(lineno) + ": bad arc line");
        int idx = g.edge_index(tail, head);
        if (idx < 0)
            throw validation_error("arc over non-edge {" + std::to_string(tail) +
                                   "," + std::to_string(head) + "}");
        if (seen[idx])
            throw validation_error("edge {" + std::to_string(tail) + "," +
                                   std::to_string(head) + "} oriented twice");
        if (w < 1) throw validation_error("weight must be positive");
        seen[idx] = true;
        wo.head_is_second[idx] = head == g.edges()[idx].second ? 1 : 0;
        wo.weight[idx] = w;
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (!seen[i])
            throw validation_error("edge {" + std::to_string(g.edges()[i].first) +
                                   "," + std::to_string(g.edges()[i].second) +
                                   "} missing from orientation");
    return wo;
}

} // namespace orient
