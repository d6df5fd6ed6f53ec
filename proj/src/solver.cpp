#include "orient/solver.hpp"

#include <algorithm>
#include <limits>

namespace orient {

Alphabet Alphabet::up_to(int w) {
    Alphabet a;
    for (int i = 1; i <= w; ++i) a.weights.push_back(i);
    return a;
}

void Alphabet::validate() const {
    if (weights.empty()) throw validation_error("alphabet must be nonempty");
    if (!std::is_sorted(weights.begin(), weights.end()) ||
        std::adjacent_find(weights.begin(), weights.end()) != weights.end())
        throw validation_error("alphabet must be sorted and duplicate-free");
    if (weights.front() != 1)
        throw validation_error("alphabet must contain 1");
    for (int w : weights)
        if (w < 1) throw validation_error("alphabet weights must be positive");
}

namespace {

struct Candidate {
    int head;
    int weight;
};

// Branch order: conflicts must surface early, so edges are visited in a
// breadth-first sweep seeded at the constrained vertices (sum-pinned or
// touching a forced edge) and, absent those, at vertices of highest
// degree. Within a vertex, heavier-degree neighbors first.
std::vector<int> branch_order(const Graph& g, const Constraints& constraints) {
    int n = g.vertex_count();
    int m = g.edge_count();
    std::vector<char> seed(n, 0);
    for (const auto& [v, rule] : constraints.vertex_rules) seed[v] = 1;
    for (const auto& [e, rule] : constraints.edge_rules) {
        if (rule.forced_head || rule.forced_weight) {
            seed[g.edges()[e].first] = 1;
            seed[g.edges()[e].second] = 1;
        }
    }
    std::vector<int> by_priority(n);
    for (int v = 0; v < n; ++v) by_priority[v] = v;
    std::stable_sort(by_priority.begin(), by_priority.end(), [&](int a, int b) {
        if (seed[a] != seed[b]) return seed[a] > seed[b];
        return g.degree(a) > g.degree(b);
    });

    std::vector<int> order;
    order.reserve(m);
    std::vector<char> edge_taken(m, 0), visited(n, 0);
    std::vector<int> queue;
    size_t qhead = 0;
    auto visit = [&](int v) {
        if (!visited[v]) {
            visited[v] = 1;
            queue.push_back(v);
        }
    };
    for (int s : by_priority) {
        visit(s);
        while (qhead < queue.size()) {
            int v = queue[qhead++];
            std::vector<int> inc = g.incident_edges(v);
            std::stable_sort(inc.begin(), inc.end(), [&](int a, int b) {
                auto other = [&](int e) {
                    auto [x, y] = g.edges()[e];
                    return x == v ? y : x;
                };
                return g.degree(other(a)) > g.degree(other(b));
            });
            for (int e : inc) {
                if (!edge_taken[e]) {
                    edge_taken[e] = 1;
                    order.push_back(e);
                }
                auto [x, y] = g.edges()[e];
                visit(x == v ? y : x);
            }
        }
    }
    return order;
}

// Depth-first exhaustive search over per-edge (head, weight) choices
// with partial in-sum pruning. Sound because weights are positive: a
// partial in-sum only grows.
class Search {
  public:
    Search(const Graph& g, long long k, const Alphabet& alphabet,
           const Constraints& constraints, bool lexicographic)
        : g_(g), k_(k) {
        alphabet.validate();
        int n = g.vertex_count();
        int m = g.edge_count();
        sum_.assign(n, 0);
        undecided_.assign(n, 0);
        max_in_potential_.assign(n, 0);
        min_req_.assign(n, 0);
        cap_.assign(n, k);
        exempt_.assign(m, false);

        for (const auto& [v, rule] : constraints.vertex_rules) {
            if (v < 0 || v >= n) throw contract_error("vertex rule out of range");
            if (rule.exact_sum) {
                cap_[v] = std::min(cap_[v], *rule.exact_sum);
                min_req_[v] = std::max(min_req_[v], *rule.exact_sum);
            }
            if (rule.max_sum) cap_[v] = std::min(cap_[v], *rule.max_sum);
            if (rule.min_sum) min_req_[v] = std::max(min_req_[v], *rule.min_sum);
        }

        candidates_.resize(m);
        for (int i = 0; i < m; ++i) {
            auto [u, v] = g.edges()[i];
            undecided_[u]++;
            undecided_[v]++;
            const EdgeRule* rule = nullptr;
            if (auto it = constraints.edge_rules.find(i);
                it != constraints.edge_rules.end())
                rule = &it->second;
            if (rule) {
                exempt_[i] = rule->exempt_properness;
                if (rule->forced_head && *rule->forced_head != u &&
                    *rule->forced_head != v)
                    throw contract_error("forced head is not an endpoint");
            }
            // direction bit 0 = min->max first, weights ascending: this
            // makes identity edge order enumerate lexicographically
            for (int head : {v, u}) {
                if (rule && rule->forced_head && *rule->forced_head != head)
                    continue;
                for (int w : alphabet.weights) {
                    if (rule && rule->forced_weight && *rule->forced_weight != w)
                        continue;
                    candidates_[i].push_back(Candidate{head, w});
                }
            }
            int max_w = 0;
            for (const auto& c : candidates_[i]) max_w = std::max(max_w, c.weight);
            max_in_potential_[u] += max_w;
            max_in_potential_[v] += max_w;
        }

        order_.resize(m);
        for (int i = 0; i < m; ++i) order_[i] = i;
        if (!lexicographic) order_ = branch_order(g, constraints);

        head_.assign(m, -1);
        weight_.assign(m, 0);
    }

    void run(const std::function<bool(const WeightedOrientation&)>& emit) {
        emit_ = &emit;
        stopped_ = false;
        // a vertex can be unsatisfiable before any assignment
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (max_in_potential_[v] < min_req_[v]) return;
            if (undecided_[v] == 0 && !finalize_ok(v)) return;
        }
        dfs(0);
    }

  private:
    bool finalize_ok(int v) const {
        if (sum_[v] < min_req_[v]) return false;
        const auto& nbrs = g_.neighbors(v);
        const auto& inc = g_.incident_edges(v);
        for (size_t j = 0; j < nbrs.size(); ++j) {
            if (exempt_[inc[j]]) continue;
            int w = nbrs[j];
            if (undecided_[w] == 0 && sum_[w] == sum_[v]) return false;
        }
        return true;
    }

    void dfs(int pos) {
        if (stopped_) return;
        if (pos == g_.edge_count()) {
            WeightedOrientation wo;
            wo.head_is_second.resize(g_.edge_count());
            wo.weight.resize(g_.edge_count());
            for (int i = 0; i < g_.edge_count(); ++i) {
                wo.head_is_second[i] = head_[i] == g_.edges()[i].second ? 1 : 0;
                wo.weight[i] = weight_[i];
            }
            if (!(*emit_)(wo)) stopped_ = true;
            return;
        }
        int e = order_[pos];
        auto [u, v] = g_.edges()[e];
        int max_w = 0;
        for (const auto& c : candidates_[e]) max_w = std::max(max_w, c.weight);

        for (const auto& c : candidates_[e]) {
            sum_[c.head] += c.weight;
            undecided_[u]--;
            undecided_[v]--;
            max_in_potential_[u] -= max_w;
            max_in_potential_[v] -= max_w;
            head_[e] = c.head;
            weight_[e] = c.weight;

            bool ok = sum_[c.head] <= cap_[c.head];
            if (ok)
                ok = max_in_potential_[u] + sum_[u] >= min_req_[u] &&
                     max_in_potential_[v] + sum_[v] >= min_req_[v];
            if (ok && undecided_[u] == 0) ok = finalize_ok(u);
            if (ok && undecided_[v] == 0) ok = finalize_ok(v);
            if (ok) dfs(pos + 1);

            sum_[c.head] -= c.weight;
            undecided_[u]++;
            undecided_[v]++;
            max_in_potential_[u] += max_w;
            max_in_potential_[v] += max_w;
            head_[e] = -1;
            if (stopped_) return;
        }
    }

    const Graph& g_;
    long long k_;
    std::vector<std::vector<Candidate>> candidates_;
    std::vector<int> order_;
    std::vector<long long> sum_, cap_, min_req_, max_in_potential_;
    std::vector<int> undecided_;
    std::vector<int> head_, weight_;
    std::vector<bool> exempt_;
    const std::function<bool(const WeightedOrientation&)>* emit_ = nullptr;
    bool stopped_ = false;
};

void check_edge_cap(const Graph& g, size_t cap, const char* who) {
    if (static_cast<size_t>(g.edge_count()) > cap)
        throw size_error(std::string(who) + ": " + std::to_string(g.edge_count()) +
                         " edges exceed cap " + std::to_string(cap));
}

} // namespace

void for_each_solution(const Graph& g, long long k, const Alphabet& alphabet,
                       const Constraints& constraints, const SolveLimits& limits,
                       const std::function<bool(const WeightedOrientation&)>& fn) {
    check_edge_cap(g, limits.max_edges, "for_each_solution");
    if (k < 0) return;
    Search s(g, k, alphabet, constraints, /*lexicographic=*/true);
    s.run(fn);
}

std::optional<WeightedOrientation> decide(const Graph& g, long long k,
                                          const Alphabet& alphabet,
                                          const Constraints& constraints,
                                          const SolveLimits& limits) {
    check_edge_cap(g, limits.max_edges, "decide");
    if (k < 0) return std::nullopt;
    std::optional<WeightedOrientation> found;
    Search s(g, k, alphabet, constraints, /*lexicographic=*/false);
    s.run([&](const WeightedOrientation& wo) {
        found = wo;
        return false;
    });
    if (found) {
        // witness soundness, cheap relative to the search
        SProfile p = s_profile(g, *found);
        for (long long s : p.s)
            if (s > k) throw internal_error("decide exceeded the sum bound");
        for (int i = 0; i < g.edge_count(); ++i) {
            auto it = constraints.edge_rules.find(i);
            if (it != constraints.edge_rules.end() && it->second.exempt_properness)
                continue;
            auto [u, v] = g.edges()[i];
            if (p.s[u] == p.s[v])
                throw internal_error("decide produced an improper witness");
        }
    }
    return found;
}

std::vector<WeightedOrientation> enumerate_optimal(const Graph& g, long long k,
                                                   const Alphabet& alphabet,
                                                   const Constraints& constraints,
                                                   const SolveLimits& limits) {
    std::vector<WeightedOrientation> out;
    for_each_solution(g, k, alphabet, constraints, limits,
                      [&](const WeightedOrientation& wo) {
                          out.push_back(wo);
                          return true;
                      });
    return out;
}

namespace {

SolveReport minimize(const Graph& g, const Alphabet& alphabet,
                     const SolveLimits& limits) {
    check_edge_cap(g, limits.max_edges, "solve");
    long long m = g.edge_count();
    long long n = std::max(1, g.vertex_count());
    long long lower = m == 0 ? 0 : (m + n - 1) / n;  // sum conservation
    if (g.vertex_count() <= kChromaticCapDefault) {
        lower = std::max<long long>(lower, chromatic_number(g) - 1);
    }
    long long delta = max_degree(g);
    for (long long k = lower; k <= delta; ++k) {
        if (auto wo = decide(g, k, alphabet, {}, limits))
            return SolveReport{k, std::move(*wo)};
    }
    if (m == 0) return SolveReport{0, WeightedOrientation{}};
    throw internal_error("no orientation found up to max degree");
}

} // namespace

SolveReport semi_proper_number(const Graph& g, const SolveLimits& limits) {
    return minimize(g, Alphabet::one_two(), limits);
}

SolveReport proper_orientation_number(const Graph& g, const SolveLimits& limits) {
    return minimize(g, Alphabet::unit(), limits);
}

namespace {

// Plain nested enumeration with only the objective bound as a cutoff;
// deliberately free of the solver's constraint propagation so that it
// can serve as an independent check on it.
class Oracle {
  public:
    Oracle(const Graph& g, int max_weight) : g_(g), max_weight_(max_weight) {
        sum_.assign(g.vertex_count(), 0);
        head_.assign(g.edge_count(), 0);
        weight_.assign(g.edge_count(), 0);
        best_ = std::numeric_limits<long long>::max();
    }

    long long run(WeightedOrientation* witness_out) {
        rec(0, 0);
        if (witness_out && best_ != std::numeric_limits<long long>::max())
            *witness_out = best_witness_;
        return best_;
    }

  private:
    void rec(int idx, long long partial_max) {
        if (partial_max >= best_) return;
        if (idx == g_.edge_count()) {
            for (const auto& [u, v] : g_.edges())
                if (sum_[u] == sum_[v]) return;
            best_ = partial_max;
            best_witness_.head_is_second.assign(g_.edge_count(), 0);
            best_witness_.weight.assign(g_.edge_count(), 0);
            for (int i = 0; i < g_.edge_count(); ++i) {
                best_witness_.head_is_second[i] =
                    head_[i] == g_.edges()[i].second ? 1 : 0;
                best_witness_.weight[i] = weight_[i];
            }
            return;
        }
        auto [u, v] = g_.edges()[idx];
        for (int head : {v, u}) {
            for (int w = 1; w <= max_weight_; ++w) {
                sum_[head] += w;
                head_[idx] = head;
                weight_[idx] = w;
                rec(idx + 1, std::max(partial_max, sum_[head]));
                sum_[head] -= w;
            }
        }
    }

    const Graph& g_;
    int max_weight_;
    std::vector<long long> sum_;
    std::vector<int> head_, weight_;
    long long best_;
    WeightedOrientation best_witness_;
};

} // namespace

long long oracle_min_max(const Graph& g, int max_weight, const SolveLimits& limits,
                         WeightedOrientation* witness_out) {
    if (max_weight < 1) throw contract_error("oracle_min_max: max_weight >= 1");
    check_edge_cap(g, limits.oracle_max_edges, "oracle_min_max");
    if (g.edge_count() == 0) {
        if (witness_out) *witness_out = WeightedOrientation{};
        return 0;
    }
    Oracle o(g, max_weight);
    long long v = o.run(witness_out);
    if (v == std::numeric_limits<long long>::max())
        throw internal_error("oracle found no semi-proper orientation");
    return v;
}

} // namespace orient
