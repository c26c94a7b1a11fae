#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "strata/stable_graph.hpp"

namespace strata {

/// Loud enumeration budget. Exceeding it throws; callers report partial
/// coverage explicitly instead of truncating silently.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class Budget {
public:
    explicit Budget(long long max_items = default_budget()) : max_(max_items) {}

    void tick(const char* where) {
        if (++used_ > max_)
            throw BudgetExceeded(std::string(where) + ": budget of " +
                                 std::to_string(max_) + " items exceeded");
    }
    long long used() const { return used_; }
    long long limit() const { return max_; }

    static long long default_budget() {
        if (const char* env = std::getenv("STRATA_BUDGET")) {
            long long v = std::atoll(env);
            if (v > 0) return v;
        }
        return 4'000'000;
    }

private:
    long long max_;
    long long used_ = 0;
};

struct EnumerateOptions {
    bool coarse_only = false;   // restrict to coarsen-fixed graphs
    int max_dimension = -1;     // restrict stratum dimension, -1 = off
    std::function<bool(const StableGraph&)> predicate;  // optional extra filter
};

namespace detail_enum {

inline bool structure_connected(const std::vector<std::vector<int>>& adj) {
    int V = static_cast<int>(adj.size());
    std::vector<bool> seen(V, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < V; ++u)
            if (u != v && adj[v][u] > 0 && !seen[u]) { seen[u] = true; stack.push_back(u); }
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

/// Places leg counts and label sets on a fixed vertex/edge structure and
/// canonicalizes the survivors into `out`.
inline void emit_structure(int n, const std::vector<int>& genus,
                           const std::vector<std::vector<int>>& adj,
                           const std::vector<int>& deg, const EnumerateOptions& opts,
                           std::map<GraphIsoClass, StableGraph>& out, Budget* budget) {
    int V = static_cast<int>(genus.size());
    if (!structure_connected(adj)) return;
    if (opts.coarse_only) {
        for (int i = 0; i < V; ++i)
            for (int j = i + 1; j < V; ++j)
                if (adj[i][j] > 0 && genus[i] == 0 && genus[j] == 0) return;
    }

    std::vector<std::pair<int, int>> edge_list;
    for (int i = 0; i < V; ++i) {
        for (int k = 0; k < adj[i][i]; ++k) edge_list.emplace_back(i, i);
        for (int j = i + 1; j < V; ++j)
            for (int k = 0; k < adj[i][j]; ++k) edge_list.emplace_back(i, j);
    }

    std::vector<int> legs(V, 0);
    std::vector<std::vector<int>> label_sets(V);

    auto build = [&]() {
        if (budget) budget->tick("enumerate_stable_graphs");
        std::vector<std::pair<int, int>> leg_list;
        for (int i = 0; i < V; ++i)
            for (int l : label_sets[i]) leg_list.emplace_back(i, l);
        StableGraph cand = make_graph(genus, edge_list, leg_list);
        if (!validate(cand).ok) return;
        if (opts.predicate && !opts.predicate(cand)) return;
        auto code = canonical_code(cand);
        if (!out.count(code)) out.emplace(code, CanonicalForm::graph_from_code(code));
    };

    // distribute label sets matching the chosen counts
    std::function<void(int, std::vector<int>)> dist = [&](int v, std::vector<int> avail) {
        if (v == V) { build(); return; }
        int want = legs[v];
        std::vector<int> chosen;
        std::function<void(size_t, int)> choose = [&](size_t start, int k) {
            if (k == 0) {
                std::vector<int> next_avail;
                std::set<int> taken(chosen.begin(), chosen.end());
                for (int x : avail)
                    if (!taken.count(x)) next_avail.push_back(x);
                label_sets[v] = chosen;
                dist(v + 1, std::move(next_avail));
                label_sets[v].clear();
                return;
            }
            for (size_t idx = start; idx + k <= avail.size(); ++idx) {
                chosen.push_back(avail[idx]);
                choose(idx + 1, k - 1);
                chosen.pop_back();
            }
        };
        choose(0, want);
    };

    std::function<void(int, int)> legs_rec = [&](int idx, int left) {
        if (idx == V) {
            if (left != 0) return;
            if (opts.max_dimension >= 0) {
                int dim = 0;
                for (int v = 0; v < V; ++v) dim += 3 * genus[v] - 3 + deg[v] + legs[v];
                if (dim > opts.max_dimension) return;
            }
            std::vector<int> all;
            for (int l = 1; l <= n; ++l) all.push_back(l);
            dist(0, std::move(all));
            return;
        }
        int mini = 0;
        if (genus[idx] == 0) mini = std::max(0, 3 - deg[idx]);
        if (genus[idx] == 1) mini = std::max(0, 1 - deg[idx]);
        for (int l = mini; l <= left; ++l) {
            legs[idx] = l;
            legs_rec(idx + 1, left - l);
        }
        legs[idx] = 0;
    };
    legs_rec(0, n);
}

} // namespace detail_enum

/// All isomorphism classes of stable graphs of genus g with n labelled legs,
/// as canonical codes mapped to canonical representatives, in code order.
///
/// Vertex genus profiles are generated first (non-increasing), then edge
/// multisets over vertex pairs, then leg counts, then label distributions;
/// connectivity and stability prune before labels are placed.
inline std::map<GraphIsoClass, StableGraph> enumerate_stable_graphs(
    int g, int n, const EnumerateOptions& opts = {}, Budget* budget = nullptr) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
        throw std::invalid_argument("enumerate_stable_graphs: (g,n) is not stable");

    std::map<GraphIsoClass, StableGraph> out;
    int vmax = std::max(1, 2 * g - 2 + n);

    for (int V = 1; V <= vmax; ++V) {
        std::vector<int> genus(V, 0);
        std::function<void(int, int, int)> genus_rec = [&](int idx, int maxval, int left) {
            if (idx == V) {
                int E = V - 1 + left;  // left = g - sum(genus) = dim H^1
                std::vector<std::vector<int>> adj(V, std::vector<int>(V, 0));
                std::vector<int> deg(V, 0);
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < V; ++i)
                    for (int j = i; j < V; ++j) pairs.emplace_back(i, j);
                std::function<void(size_t, int)> edge_rec = [&](size_t pi, int rem) {
                    if (pi == pairs.size()) {
                        if (rem == 0)
                            detail_enum::emit_structure(n, genus, adj, deg, opts, out, budget);
                        return;
                    }
                    auto [i, j] = pairs[pi];
                    for (int m = 0; m <= rem; ++m) {
                        adj[i][j] = m;
                        if (i != j) adj[j][i] = m;
                        deg[i] += (i == j) ? 2 * m : m;
                        if (i != j) deg[j] += m;
                        edge_rec(pi + 1, rem - m);
                        deg[i] -= (i == j) ? 2 * m : m;
                        if (i != j) deg[j] -= m;
                    }
                    adj[i][j] = 0;
                    if (i != j) adj[j][i] = 0;
                };
                edge_rec(0, E);
                return;
            }
            for (int val = std::min(maxval, left); val >= 0; --val) {
                genus[idx] = val;
                genus_rec(idx + 1, val, left - val);
            }
        };
        genus_rec(0, g, g);
    }
    return out;
}

} // namespace strata
