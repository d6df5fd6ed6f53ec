#include "orient/graph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <sstream>

namespace orient {

Graph Graph::from_edges(int n, std::vector<Edge> edges,
                        std::map<int, std::string> labels) {
    if (n < 0) throw validation_error("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw validation_error("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw validation_error("edge {" + std::to_string(u) + "," +
                                   std::to_string(v) + "} out of range");
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1])
            throw validation_error("duplicate edge {" +
                                   std::to_string(edges[i].first) + "," +
                                   std::to_string(edges[i].second) + "}");
    }
    for (const auto& [v, label] : labels) {
        if (v < 0 || v >= n)
            throw validation_error("label on out-of-range vertex " +
                                   std::to_string(v));
    }

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.labels_ = std::move(labels);
    g.adj_.resize(n);
    g.inc_.resize(n);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges_[i];
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.inc_[u].push_back(i);
        g.inc_[v].push_back(i);
    }
    return g;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it != edges_.end() && *it == key)
        return static_cast<int>(it - edges_.begin());
    return -1;
}

std::optional<int> Graph::vertex_by_label(const std::string& label) const {
    for (const auto& [v, l] : labels_)
        if (l == label) return v;
    return std::nullopt;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, m = 0;
    std::vector<Edge> edges;
    std::map<int, std::string> labels;

    auto fail = [&](const std::string& msg) {
        throw parse_error("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) fail("duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("bad header");
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) fail("edge before header");
            int u, v;
            if (!(ls >> u >> v)) fail("bad edge line");
            edges.emplace_back(u, v);
        } else if (tag == "l") {
            if (!have_header) fail("label before header");
            int v;
            std::string label;
            if (!(ls >> v >> label)) fail("bad label line");
            labels[v] = label;
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw parse_error("missing 'p <n> <m>' header");
    if (static_cast<int>(edges.size()) != m)
        throw parse_error("header declares " + std::to_string(m) +
                          " edges, found " + std::to_string(edges.size()));
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    for (const auto& [v, label] : g.labels()) out << "l " << v << " " << label << "\n";
    return out.str();
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
    return d;
}

BipartiteResult is_bipartite(const Graph& g) {
    BipartiteResult r;
    r.coloring.assign(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (r.coloring[s] != -1) continue;
        r.coloring[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (r.coloring[w] == -1) {
                    r.coloring[w] = 1 - r.coloring[v];
                    q.push(w);
                } else if (r.coloring[w] == r.coloring[v]) {
                    r.bipartite = false;
                    r.coloring.clear();
                    return r;
                }
            }
        }
    }
    r.bipartite = true;
    return r;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        const auto& nu = g.neighbors(u);
        for (int w : nu)
            if (w != v && g.has_edge(v, w)) return std::array<int, 3>{u, v, w};
    }
    return std::nullopt;
}

} // namespace orient
