#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orient/errors.hpp"

namespace orient {

// Undirected edge with canonical endpoint order (first < second).
using Edge = std::pair<int, int>;

// Finite simple undirected graph. Vertices are 0..n-1, edges are kept
// sorted and canonical. Immutable after construction; safe to share
// across threads read-only.
class Graph {
  public:
    Graph() = default;

    // Validates no loops, no parallel edges, endpoints < n. Throws
    // validation_error otherwise.
    static Graph from_edges(int n, std::vector<Edge> edges,
                            std::map<int, std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<int, std::string>& labels() const { return labels_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    // Edge indices incident to v, parallel to neighbors(v).
    const std::vector<int>& incident_edges(int v) const { return inc_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    // Index into edges() or -1.
    int edge_index(int u, int v) const;

    std::optional<int> vertex_by_label(const std::string& label) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<int, std::string> labels_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

// Edge-list document format:
//   c <comment>
//   p <n> <m>
//   e <u> <v>
//   l <v> <label>
// Header first, 0-based endpoints, UTF-8, LF line endings.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

int max_degree(const Graph& g);
int min_degree(const Graph& g);

struct BipartiteResult {
    bool bipartite = false;
    // 0/1 per vertex when bipartite (each component colored from its
    // smallest vertex).
    std::vector<int> coloring;
};
BipartiteResult is_bipartite(const Graph& g);

// Exact planarity (left-right criterion); the m <= 3n-6 bound is used
// only as a fast rejection.
bool is_planar(const Graph& g);

inline constexpr int kChromaticCapDefault = 24;

// Exact chromatic number by branch and bound with a greedy-clique lower
// bound. Throws size_error when vertex_count() > cap.
int chromatic_number(const Graph& g, int cap = kChromaticCapDefault);

// Vertices of some triangle, if any. A triangle certifies chi >= 3 and
// hence a semi-proper lower bound of 2 without an exact chi solve.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

} // namespace orient
