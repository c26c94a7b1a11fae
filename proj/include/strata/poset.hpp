#pragma once

#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "strata/enumerate.hpp"
#include "strata/stable_graph.hpp"

namespace strata {

/// The coarse poset members: coarsen-fixed stable graphs of type (g,n).
inline std::map<GraphIsoClass, StableGraph> q_members(int g, int n,
                                                      Budget* budget = nullptr) {
    EnumerateOptions opts;
    opts.coarse_only = true;
    return enumerate_stable_graphs(g, n, opts, budget);
}

namespace detail_poset {

/// Neighbors of a graph under the order-generating moves: contract any
/// internal edge (upward), or split a genus-0 vertex into two genus-0
/// vertices joined by a new edge (the inverse of a genus-0/genus-0 collapse).
inline std::vector<StableGraph> poset_moves(const StableGraph& g) {
    std::vector<StableGraph> out;
    for (auto [h, p] : g.edges()) out.push_back(contract_edge(g, h));
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.genus[v] != 0) continue;
        const auto& block = g.vertices[v];
        int k = static_cast<int>(block.size());
        if (k < 4) continue;  // both sides need valence >= 3 after the split
        // subsets containing block[0], sizes 2..k-2
        for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
            std::vector<int> side_a{block[0]}, side_b;
            for (int t = 1; t < k; ++t)
                ((mask >> (t - 1)) & 1u ? side_a : side_b).push_back(block[t]);
            if (side_a.size() < 2 || side_b.size() < 2) continue;
            StableGraph split = g;
            int h_new = split.num_half_edges();
            split.partner.push_back(h_new + 1);
            split.partner.push_back(h_new);
            split.leg_label.push_back(0);
            split.leg_label.push_back(0);
            side_a.push_back(h_new);
            side_b.push_back(h_new + 1);
            split.vertices[v] = side_a;
            split.vertices.push_back(side_b);
            split.genus.push_back(0);
            out.push_back(split);
        }
    }
    return out;
}

} // namespace detail_poset

/// Decides G <=_Q H for coarsen-fixed graphs of the same (g,n) by a BFS over
/// the generating relations, memoized on canonical forms. Terminates because
/// the set of stable graphs of fixed type is finite.
inline bool q_less_or_equal(const StableGraph& G, const StableGraph& H,
                            Budget* budget = nullptr) {
    if (G.total_genus() != H.total_genus() || G.num_legs() != H.num_legs())
        throw std::invalid_argument("q_less_or_equal: type (g,n) mismatch");
    if (!isomorphic(G, coarsen(G)) || !isomorphic(H, coarsen(H)))
        throw std::invalid_argument("q_less_or_equal: inputs must be coarsen-fixed");

    auto target = canonical_code(H);
    std::set<GraphIsoClass> seen;
    std::deque<StableGraph> queue;
    queue.push_back(G);
    seen.insert(canonical_code(G));
    while (!queue.empty()) {
        StableGraph cur = queue.front();
        queue.pop_front();
        if (canonical_code(cur) == target) return true;
        for (auto& next : detail_poset::poset_moves(cur)) {
            auto code = canonical_code(next);
            if (seen.insert(code).second) {
                if (budget) budget->tick("q_less_or_equal");
                queue.push_back(next);
            }
        }
    }
    return false;
}

} // namespace strata
