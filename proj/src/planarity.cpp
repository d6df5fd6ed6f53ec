// Left-right planarity criterion (Brandes' formulation of de
// Fraysseix-Rosenstiehl). Two DFS passes: the first orients the graph
// and computes lowpoints and nesting order, the second maintains a
// stack of conflict pairs of return-edge intervals and fails exactly
// when some interval pair cannot be split into left and right sides.

#include <algorithm>
#include <limits>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

namespace {

constexpr int kNone = -1;

struct Interval {
    int low = kNone;  // directed edge ids
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
    Interval left;
    Interval right;
    void swap_sides() { std::swap(left, right); }
};

struct LrState {
    // directed edge arrays, id = position in `to`
    std::vector<int> from, to;
    std::vector<int> lowpt, lowpt2, nesting;
    std::vector<int> ref, lowpt_edge;
    std::vector<size_t> stack_bottom;

    std::vector<int> height;       // per vertex, kNone = unvisited
    std::vector<int> parent_edge;  // per vertex, directed edge id or kNone
    std::vector<std::vector<int>> out;  // oriented adjacency (edge ids)

    std::vector<ConflictPair> S;

    int add_dir_edge(int u, int v) {
        from.push_back(u);
        to.push_back(v);
        lowpt.push_back(0);
        lowpt2.push_back(0);
        nesting.push_back(0);
        ref.push_back(kNone);
        lowpt_edge.push_back(kNone);
        stack_bottom.push_back(0);
        return static_cast<int>(to.size()) - 1;
    }
};

class LrTest {
  public:
    explicit LrTest(const Graph& g) : g_(g) {}

    bool run() {
        int n = g_.vertex_count();
        int m = g_.edge_count();
        if (n >= 3 && m > 3 * n - 6) return false;
        st_.height.assign(n, kNone);
        st_.parent_edge.assign(n, kNone);
        st_.out.assign(n, {});
        oriented_.assign(m, false);

        std::vector<int> roots;
        for (int v = 0; v < n; ++v) {
            if (st_.height[v] == kNone) {
                st_.height[v] = 0;
                roots.push_back(v);
                dfs_orient(v);
            }
        }
        for (int v = 0; v < n; ++v) {
            std::stable_sort(st_.out[v].begin(), st_.out[v].end(),
                             [&](int a, int b) {
                                 return st_.nesting[a] < st_.nesting[b];
                             });
        }
        for (int r : roots)
            if (!dfs_test(r)) return false;
        return true;
    }

  private:
    void dfs_orient(int v) {
        int e = st_.parent_edge[v];
        for (size_t idx = 0; idx < g_.neighbors(v).size(); ++idx) {
            int w = g_.neighbors(v)[idx];
            int undirected = g_.incident_edges(v)[idx];
            if (oriented_[undirected]) continue;
            oriented_[undirected] = true;
            int vw = st_.add_dir_edge(v, w);
            st_.out[v].push_back(vw);
            st_.lowpt[vw] = st_.height[v];
            st_.lowpt2[vw] = st_.height[v];
            if (st_.height[w] == kNone) {  // tree edge
                st_.parent_edge[w] = vw;
                st_.height[w] = st_.height[v] + 1;
                dfs_orient(w);
            } else {  // back edge
                st_.lowpt[vw] = st_.height[w];
            }
            st_.nesting[vw] = 2 * st_.lowpt[vw];
            if (st_.lowpt2[vw] < st_.height[v]) st_.nesting[vw] += 1;
            if (e != kNone) {
                if (st_.lowpt[vw] < st_.lowpt[e]) {
                    st_.lowpt2[e] = std::min(st_.lowpt[e], st_.lowpt2[vw]);
                    st_.lowpt[e] = st_.lowpt[vw];
                } else if (st_.lowpt[vw] > st_.lowpt[e]) {
                    st_.lowpt2[e] = std::min(st_.lowpt2[e], st_.lowpt[vw]);
                } else {
                    st_.lowpt2[e] = std::min(st_.lowpt2[e], st_.lowpt2[vw]);
                }
            }
        }
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && st_.lowpt[i.high] > st_.lowpt[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) return st_.lowpt[p.right.low];
        if (p.right.empty()) return st_.lowpt[p.left.low];
        return std::min(st_.lowpt[p.left.low], st_.lowpt[p.right.low]);
    }

    bool add_constraints(int ei, int e) {
        ConflictPair P;
        // merge return edges of ei into P.right
        while (true) {
            ConflictPair Q = st_.S.back();
            st_.S.pop_back();
            if (!Q.left.empty()) Q.swap_sides();
            if (!Q.left.empty()) return false;
            if (st_.lowpt[Q.right.low] > st_.lowpt[e]) {
                if (P.right.empty())
                    P.right.high = Q.right.high;
                else
                    st_.ref[P.right.low] = Q.right.high;
                P.right.low = Q.right.low;
            } else {
                st_.ref[Q.right.low] = st_.lowpt_edge[e];
            }
            if (st_.S.size() == st_.stack_bottom[ei]) break;
        }
        // merge conflicting return edges of earlier siblings into P.left
        while (!st_.S.empty() && (conflicting(st_.S.back().left, ei) ||
                                  conflicting(st_.S.back().right, ei))) {
            ConflictPair Q = st_.S.back();
            st_.S.pop_back();
            if (conflicting(Q.right, ei)) Q.swap_sides();
            if (conflicting(Q.right, ei)) return false;
            st_.ref[P.right.low] = Q.right.high;
            if (Q.right.low != kNone) P.right.low = Q.right.low;
            if (P.left.empty())
                P.left.high = Q.left.high;
            else
                st_.ref[P.left.low] = Q.left.high;
            P.left.low = Q.left.low;
        }
        if (!(P.left.empty() && P.right.empty())) st_.S.push_back(P);
        return true;
    }

    void trim_back_edges(int u) {
        while (!st_.S.empty() && lowest(st_.S.back()) == st_.height[u])
            st_.S.pop_back();
        if (st_.S.empty()) return;
        ConflictPair P = st_.S.back();
        st_.S.pop_back();
        while (P.left.high != kNone && st_.to[P.left.high] == u)
            P.left.high = st_.ref[P.left.high];
        if (P.left.high == kNone && P.left.low != kNone) {
            st_.ref[P.left.low] = P.right.low;
            P.left.low = kNone;
        }
        while (P.right.high != kNone && st_.to[P.right.high] == u)
            P.right.high = st_.ref[P.right.high];
        if (P.right.high == kNone && P.right.low != kNone) {
            st_.ref[P.right.low] = P.left.low;
            P.right.low = kNone;
        }
        st_.S.push_back(P);
    }

    bool dfs_test(int v) {
        int e = st_.parent_edge[v];
        bool first = true;
        for (int ei : st_.out[v]) {
            int w = st_.to[ei];
            st_.stack_bottom[ei] = st_.S.size();
            if (ei == st_.parent_edge[w]) {  // tree edge
                if (!dfs_test(w)) return false;
            } else {  // back edge
                st_.lowpt_edge[ei] = ei;
                ConflictPair P;
                P.right = Interval{ei, ei};
                st_.S.push_back(P);
            }
            if (st_.lowpt[ei] < st_.height[v]) {  // ei has a return edge
                if (first) {
                    st_.lowpt_edge[e] = st_.lowpt_edge[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
            first = false;
        }
        if (e != kNone) {
            int u = st_.from[e];
            trim_back_edges(u);
            if (st_.lowpt[e] < st_.height[u] && !st_.S.empty()) {
                int hl = st_.S.back().left.high;
                int hr = st_.S.back().right.high;
                if (hl != kNone && (hr == kNone || st_.lowpt[hl] > st_.lowpt[hr]))
                    st_.ref[e] = hl;
                else
                    st_.ref[e] = hr;
            }
        }
        return true;
    }

    const Graph& g_;
    LrState st_;
    std::vector<bool> oriented_;
};

} // namespace

bool is_planar(const Graph& g) {
    if (g.vertex_count() <= 3) return true;
    return LrTest(g).run();
}

} // namespace orient
