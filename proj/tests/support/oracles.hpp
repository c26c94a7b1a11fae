#pragma once

// Brute-force oracles, deliberately independent of the library's production
// paths: enumeration by flat loops with pairwise isomorphism dedup, graph
// isomorphism by vertex-bijection search, and character tables from
// orthogonalized permutation characters.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "strata/characters.hpp"
#include "strata/partition.hpp"
#include "strata/stable_graph.hpp"

namespace oracles {

using strata::StableGraph;

/// Isomorphism fixing leg labels, by exhaustive vertex-bijection search.
inline bool brute_isomorphic(const StableGraph& A, const StableGraph& B) {
    int V = A.num_vertices();
    if (V != B.num_vertices()) return false;
    if (A.num_edges() != B.num_edges() || A.num_legs() != B.num_legs()) return false;
    auto adjA = A.adjacency(), adjB = B.adjacency();
    std::vector<std::vector<int>> legsA(V), legsB(V);
    for (int v = 0; v < V; ++v) { legsA[v] = A.legs_at(v); legsB[v] = B.legs_at(v); }
    std::vector<int> perm(V);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < V && ok; ++v) {
            if (A.genus[v] != B.genus[perm[v]]) ok = false;
            else if (legsA[v] != legsB[perm[v]]) ok = false;
        }
        for (int v = 0; v < V && ok; ++v)
            for (int w = v; w < V && ok; ++w)
                if (adjA[v][w] != adjB[perm[v]][perm[w]]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Insert into a list of pairwise non-isomorphic graphs, bucketed on cheap
/// invariants; returns true if the graph was new.
class IsoClassSet {
public:
    bool insert(const StableGraph& g) {
        auto key = bucket_key(g);
        auto& bucket = buckets_[key];
        for (const auto& h : bucket)
            if (brute_isomorphic(g, h)) return false;
        bucket.push_back(g);
        ++size_;
        return true;
    }
    long long size() const { return size_; }
    std::vector<StableGraph> all() const {
        std::vector<StableGraph> out;
        for (auto& [k, b] : buckets_)
            for (auto& g : b) out.push_back(g);
        return out;
    }

private:
    static std::vector<long long> bucket_key(const StableGraph& g) {
        std::vector<std::vector<long long>> per_vertex;
        for (int v = 0; v < g.num_vertices(); ++v) {
            std::vector<long long> k{g.genus[v], g.valence(v)};
            for (int l : g.legs_at(v)) k.push_back(l);
            per_vertex.push_back(std::move(k));
        }
        std::sort(per_vertex.begin(), per_vertex.end());
        std::vector<long long> key{g.num_vertices(), g.num_edges()};
        for (auto& k : per_vertex) {
            key.push_back(-1);
            key.insert(key.end(), k.begin(), k.end());
        }
        return key;
    }

    std::map<std::vector<long long>, std::vector<StableGraph>> buckets_;
    long long size_ = 0;
};

/// Naive flat enumeration of stable graph classes of type (g, n): every
/// vertex count, genus vector, edge multiset and label-to-vertex assignment,
/// filtered through validate, deduplicated pairwise.
inline std::vector<StableGraph> enumerate_flat(int g, int n) {
    IsoClassSet classes;
    int vmax = std::max(1, 2 * g - 2 + n);
    for (int V = 1; V <= vmax; ++V) {
        std::vector<int> genus(V, 0);
        std::function<void()> with_genus = [&]() {
            int sum = std::accumulate(genus.begin(), genus.end(), 0);
            if (sum > g) return;
            int E = V - 1 + (g - sum);
            std::vector<std::pair<int, int>> pairs;
            for (int x = 0; x < V; ++x)
                for (int y = x; y < V; ++y) pairs.emplace_back(x, y);
            std::vector<int> mult(pairs.size(), 0);
            std::vector<int> deg(V, 0);
            std::function<void(size_t, int)> edges = [&](size_t pi, int rem) {
                if (pi == pairs.size()) {
                    if (rem != 0) return;
                    std::vector<std::pair<int, int>> edge_list;
                    for (size_t q = 0; q < pairs.size(); ++q)
                        for (int t = 0; t < mult[q]; ++t) edge_list.push_back(pairs[q]);
                    std::vector<int> legs(V, 0);
                    // label placement with a deficit prune: unfilled stability
                    // demands must fit in the labels still to place
                    std::vector<int> owner(n + 1, 0);
                    std::function<void(int)> assign = [&](int label) {
                        if (label > n) {
                            std::vector<std::pair<int, int>> leg_list;
                            for (int l = 1; l <= n; ++l) leg_list.emplace_back(owner[l], l);
                            StableGraph cand = strata::make_graph(genus, edge_list, leg_list);
                            if (strata::validate(cand).ok) classes.insert(cand);
                            return;
                        }
                        int deficit = 0;
                        for (int v = 0; v < V; ++v) {
                            int need = genus[v] == 0 ? 3 : (genus[v] == 1 ? 1 : 0);
                            deficit += std::max(0, need - deg[v] - legs[v]);
                        }
                        if (deficit > n - label + 1) return;
                        for (int v = 0; v < V; ++v) {
                            owner[label] = v;
                            ++legs[v];
                            assign(label + 1);
                            --legs[v];
                        }
                    };
                    assign(1);
                    return;
                }
                auto [x, y] = pairs[pi];
                for (int m = 0; m <= rem; ++m) {
                    mult[pi] = m;
                    deg[x] += (x == y) ? 2 * m : m;
                    if (x != y) deg[y] += m;
                    edges(pi + 1, rem - m);
                    deg[x] -= (x == y) ? 2 * m : m;
                    if (x != y) deg[y] -= m;
                }
                mult[pi] = 0;
            };
            edges(0, E);
        };
        std::function<void(int)> gen = [&](int idx) {
            if (idx == V) { with_genus(); return; }
            for (int val = 0; val <= g; ++val) {
                genus[idx] = val;
                gen(idx + 1);
            }
        };
        gen(0);
    }
    return classes.all();
}

/// Literal half-edge oracle for very small types: every assignment of
/// half-edges to vertices, every pairing of the internal ones, every genus
/// vector; legs are the trailing half-edges, labelled in order.
inline std::vector<StableGraph> enumerate_halfedge(int g, int n) {
    IsoClassSet classes;
    int vmax = std::max(1, 2 * g - 2 + n);
    for (int V = 1; V <= vmax; ++V) {
        std::vector<int> genus(V, 0);
        std::function<void(int)> gen_genus = [&](int idx) {
            if (idx == V) {
                int sum = std::accumulate(genus.begin(), genus.end(), 0);
                if (sum > g) return;
                int E = V - 1 + (g - sum);
                if (E < 0) return;
                int H = 2 * E + n;
                std::vector<int> owner(H, 0);
                std::function<void(int)> gen_owner = [&](int h) {
                    if (h == H) {
                        // pair the first 2E half-edges in all ways
                        std::vector<int> partner(H, -1);
                        std::vector<int> pool;
                        for (int x = 0; x < 2 * E; ++x) pool.push_back(x);
                        std::function<void()> match = [&]() {
                            std::vector<int> free;
                            for (int x = 0; x < 2 * E; ++x)
                                if (partner[x] < 0) free.push_back(x);
                            if (free.empty()) {
                                StableGraph cand;
                                cand.partner = partner;
                                cand.leg_label.assign(H, 0);
                                for (int l = 0; l < n; ++l)
                                    cand.leg_label[2 * E + l] = l + 1;
                                cand.vertices.assign(V, {});
                                for (int x = 0; x < H; ++x)
                                    cand.vertices[owner[x]].push_back(x);
                                cand.genus = genus;
                                if (strata::validate(cand).ok) classes.insert(cand);
                                return;
                            }
                            int a = free[0];
                            for (size_t t = 1; t < free.size(); ++t) {
                                partner[a] = free[t];
                                partner[free[t]] = a;
                                match();
                                partner[a] = -1;
                                partner[free[t]] = -1;
                            }
                        };
                        match();
                        return;
                    }
                    for (int v = 0; v < V; ++v) {
                        owner[h] = v;
                        gen_owner(h + 1);
                    }
                };
                gen_owner(0);
                return;
            }
            for (int val = 0; val <= g; ++val) {
                genus[idx] = val;
                gen_genus(idx + 1);
            }
        };
        gen_genus(0);
    }
    return classes.all();
}

// ---------------------------------------------------------------------------
// Character table oracle: permutation characters of the Young set actions,
// orthogonalized in lexicographically descending partition order.
// ---------------------------------------------------------------------------

/// Number of ordered set partitions of [m] with block sizes nu fixed by a
/// permutation of cycle type mu, counted by assigning whole cycles to blocks.
inline long long perm_character(const strata::Partition& nu, const strata::Partition& mu) {
    std::vector<int> room(nu.parts.begin(), nu.parts.end());
    const auto& cyc = mu.parts;
    std::function<long long(size_t)> rec = [&](size_t c) -> long long {
        if (c == cyc.size()) return 1;
        long long total = 0;
        for (auto& r : room) {
            if (r < cyc[c]) continue;
            r -= cyc[c];
            total += rec(c + 1);
            r += cyc[c];
        }
        return total;
    };
    return rec(0);
}

/// Full character table via Gram-Schmidt on permutation characters; rows and
/// columns in partitions_of(m) order, matching strata::character_table.
inline std::vector<std::vector<long long>> character_table_oracle(int m) {
    using strata::Partition;
    using strata::Rat;
    auto parts = strata::partitions_of(m);
    size_t K = parts.size();
    std::vector<std::vector<Rat>> chi(K, std::vector<Rat>(K));
    auto inner = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        Rat acc(0);
        for (size_t j = 0; j < K; ++j)
            acc += x[j] * y[j] / Rat(strata::z_of(parts[j]));
        return acc;
    };
    for (size_t idx = 0; idx < K; ++idx) {
        std::vector<Rat> pi(K);
        for (size_t j = 0; j < K; ++j) pi[j] = Rat(perm_character(parts[idx], parts[j]));
        for (size_t prev = 0; prev < idx; ++prev) {
            Rat c = inner(pi, chi[prev]);
            for (size_t j = 0; j < K; ++j) pi[j] -= c * chi[prev][j];
        }
        chi[idx] = pi;
    }
    std::vector<std::vector<long long>> out(K, std::vector<long long>(K));
    for (size_t i = 0; i < K; ++i)
        for (size_t j = 0; j < K; ++j) out[i][j] = chi[i][j].as_integer();
    return out;
}

} // namespace oracles
