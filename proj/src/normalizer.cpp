#include "orient/normalizer.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace orient {

namespace {

std::vector<int> in_edges_of(const Graph& g, const WeightedOrientation& wo, int v) {
    std::vector<int> in;
    for (int e : g.incident_edges(v))
        if (wo.head(g, e) == v) in.push_back(e);
    return in;
}

// Smallest q in [lo, hi] avoiding `forbidden`; the caller guarantees by
// counting that one exists.
long long smallest_admissible(long long lo, long long hi,
                              const std::set<long long>& forbidden) {
    for (long long q = lo; q <= hi; ++q)
        if (!forbidden.count(q)) return q;
    throw internal_error("pigeonhole exhausted: no admissible sum");
}

// Distribute `q` over `edges` as weights in {1,2}: ones first, twos on
// the tail of the list.
void assign_one_two(WeightedOrientation& wo, const std::vector<int>& edges,
                    long long q) {
    long long k = static_cast<long long>(edges.size());
    long long twos = q - k;
    if (twos < 0 || twos > k) throw internal_error("sum out of {1,2} range");
    for (size_t i = 0; i < edges.size(); ++i)
        wo.weight[edges[i]] =
            static_cast<long long>(i) < k - twos ? 1 : 2;
}

// Shortest directed path from `from` to `to`; neighbors scanned in
// adjacency order so the result is deterministic. Returns vertex
// sequence including both ends.
std::vector<int> directed_path(const Graph& g, const WeightedOrientation& wo,
                               int from, int to) {
    std::vector<int> parent(g.vertex_count(), -1);
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<int> q{from};
    seen[from] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (v == to) break;
        for (int e : g.incident_edges(v)) {
            if (wo.tail(g, e) != v) continue;
            int w = wo.head(g, e);
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                q.push_back(w);
            }
        }
    }
    if (!seen[to]) return {};
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

BadEdgeLedger bad_edge_ledger(const Graph& g, const WeightedOrientation& wo) {
    check_covers(g, wo);
    BadEdgeLedger l;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (wo.weight[i] > 2) {
            l.t += 1;
            l.b += wo.weight[i];
        }
    }
    return l;
}

int reachable_min_vertex(const Graph& g, const WeightedOrientation& wo, int v) {
    SProfile prof = s_profile(g, wo);
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<int> q{v};
    seen[v] = true;
    int best = v;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (prof.s[x] < prof.s[best] || (prof.s[x] == prof.s[best] && x < best))
            best = x;
        for (int e : g.incident_edges(x)) {
            if (wo.tail(g, e) != x) continue;
            int w = wo.head(g, e);
            if (!seen[w]) {
                seen[w] = true;
                q.push_back(w);
            }
        }
    }
    return best;
}

WeightedOrientation case1_rebalance(const Graph& g, const WeightedOrientation& wo,
                                    int bad_edge) {
    check_covers(g, wo);
    if (wo.weight[bad_edge] <= 2)
        throw contract_error("case1_rebalance: edge is not heavy");
    int v = wo.head(g, bad_edge);
    SProfile prof = s_profile(g, wo);
    int p = reachable_min_vertex(g, wo, v);
    if (prof.s[p] != prof.s[v])
        throw contract_error("case1_rebalance: head does not attain the reachable minimum");

    std::vector<int> in = in_edges_of(g, wo, v);
    std::set<long long> forbidden;
    for (int e : in) {
        if (e != bad_edge && wo.weight[e] != 2)
            throw contract_error("case1_rebalance: sibling in-edge weight is not 2");
        forbidden.insert(prof.s[wo.tail(g, e)]);
    }
    long long k = static_cast<long long>(in.size());
    long long q = smallest_admissible(k, 2 * k, forbidden);

    WeightedOrientation out = wo;
    assign_one_two(out, in, q);
    return out;
}

WeightedOrientation case2_reverse_path(const Graph& g,
                                       const WeightedOrientation& wo,
                                       int bad_edge, int p) {
    check_covers(g, wo);
    if (wo.weight[bad_edge] <= 2)
        throw contract_error("case2_reverse_path: edge is not heavy");
    int v = wo.head(g, bad_edge);
    SProfile prof = s_profile(g, wo);
    if (prof.s[p] >= prof.s[v])
        throw contract_error("case2_reverse_path: target sum is not smaller");
    std::vector<int> path = directed_path(g, wo, v, p);
    if (path.size() < 2)
        throw contract_error("case2_reverse_path: no directed path to target");

    std::vector<int> path_edges;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        int e = g.edge_index(path[i], path[i + 1]);
        if (e < 0 || wo.head(g, e) != path[i + 1])
            throw internal_error("broken directed path");
        path_edges.push_back(e);
    }
    int last_edge = path_edges.back();
    long long w_last = wo.weight[last_edge];

    std::vector<int> in = in_edges_of(g, wo, p);
    long long k = static_cast<long long>(in.size());
    std::vector<int> others;  // in-edges of p except the path edge
    for (int e : in)
        if (e != last_edge) others.push_back(e);

    WeightedOrientation out = wo;
    // reverse the path and rotate weights one step toward v; every
    // vertex on the path keeps its in-sum
    for (int e : path_edges) out.head_is_second[e] ^= 1;
    out.weight[path_edges[0]] = 1;
    for (size_t i = 1; i < path_edges.size(); ++i)
        out.weight[path_edges[i]] = wo.weight[path_edges[i - 1]];
    out.weight[bad_edge] = wo.weight[bad_edge] - 1;

    if (prof.s[p] <= w_last + 2 * k - 4) {
        // two unit in-edges absorb the displaced weight; sums are
        // preserved pointwise
        std::vector<int> units;
        for (int e : others)
            if (wo.weight[e] == 1) units.push_back(e);
        if (units.size() < 2)
            throw internal_error("case 2: expected two unit in-edges");
        out.weight[units[0]] = 2;
        out.weight[units[1]] = static_cast<int>(w_last);
    } else {
        std::set<long long> forbidden;
        for (int e : others) forbidden.insert(prof.s[wo.tail(g, e)]);
        long long q = smallest_admissible(k - 1, 2 * k - 2, forbidden);
        assign_one_two(out, others, q);
    }
    return out;
}

namespace {

// One sibling rewrite at the head of a heavy edge: move a unit onto a
// weight-1 in-edge, or fold the heavy edge into another heavy sibling.
// Both keep every in-sum fixed and drop (t, b).
WeightedOrientation sibling_rewrite(const Graph& g, const WeightedOrientation& wo,
                                    int bad_edge, int sibling,
                                    NormalizeStep::Kind* kind) {
    WeightedOrientation out = wo;
    if (wo.weight[sibling] == 1) {
        out.weight[bad_edge] = wo.weight[bad_edge] - 1;
        out.weight[sibling] = 2;
        *kind = NormalizeStep::Kind::weight_shift;
    } else {
        out.weight[sibling] = wo.weight[sibling] + wo.weight[bad_edge] - 1;
        out.weight[bad_edge] = 1;
        *kind = NormalizeStep::Kind::weight_merge;
    }
    return out;
}

} // namespace

WeightedOrientation normalize_to_12(const Graph& g, const WeightedOrientation& wo,
                                    NormalizeStats* stats) {
    check_covers(g, wo);
    if (!is_semi_proper(g, wo))
        throw contract_error("normalize_to_12: input is not semi-proper");

    WeightedOrientation cur = wo;
    long long max_before = max_s(g, cur);
    BadEdgeLedger ledger = bad_edge_ledger(g, cur);
    long long guard =
        std::accumulate(cur.weight.begin(), cur.weight.end(), 0LL);
    long long iterations = 0;

    while (ledger.t > 0) {
        if (++iterations > guard)
            throw internal_error("normalize_to_12: descent measure failed to move");

        int bad = -1;
        for (int i = 0; i < g.edge_count(); ++i)
            if (cur.weight[i] > 2) { bad = i; break; }

        int v = cur.head(g, bad);
        SProfile prof = s_profile(g, cur);
        int p = reachable_min_vertex(g, cur, v);

        WeightedOrientation next;
        NormalizeStep::Kind kind;
        if (prof.s[p] == prof.s[v]) {
            int sibling = -1;
            for (int e : in_edges_of(g, cur, v))
                if (e != bad && cur.weight[e] != 2) { sibling = e; break; }
            if (sibling >= 0) {
                next = sibling_rewrite(g, cur, bad, sibling, &kind);
            } else {
                next = case1_rebalance(g, cur, bad);
                kind = NormalizeStep::Kind::rebalance;
            }
        } else {
            long long b_before = ledger.b;
            next = case2_reverse_path(g, cur, bad, p);
            BadEdgeLedger after = bad_edge_ledger(g, next);
            kind = after.b < b_before && s_profile(g, next).s == prof.s
                       ? NormalizeStep::Kind::path_rotate
                       : NormalizeStep::Kind::path_rebalance;
        }

        BadEdgeLedger after = bad_edge_ledger(g, next);
        if (!after.lex_less(ledger))
            throw internal_error("normalize_to_12: (t,b) did not decrease");
        if (!is_semi_proper(g, next))
            throw internal_error("normalize_to_12: rewrite broke semi-properness");
        if (max_s(g, next) > max_before)
            throw internal_error("normalize_to_12: rewrite raised the maximum in-sum");

        cur = std::move(next);
        ledger = after;
        if (stats) stats->steps.push_back(NormalizeStep{kind, bad, ledger});
    }
    return cur;
}

} // namespace orient
