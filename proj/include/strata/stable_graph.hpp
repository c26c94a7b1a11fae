#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace strata {

/// A stable graph in the half-edge encoding: a finite set of half-edges
/// partitioned into vertices, a fixed-point-free pairing on the internal
/// half-edges (the edges), labelled unpaired half-edges (the external legs),
/// and a genus for each vertex.
///
/// Loops contribute 2 to the valence of their vertex. The genus of the whole
/// graph is dim H^1 + sum of vertex genera.
struct StableGraph {
    std::vector<std::vector<int>> vertices;  // partition of half-edge ids
    std::vector<int> partner;                // partner[h], or -1 for a leg
    std::vector<int> leg_label;              // 0 for internal, >=1 for legs
    std::vector<int> genus;                  // one entry per vertex

    int num_half_edges() const { return static_cast<int>(partner.size()); }
    int num_vertices() const { return static_cast<int>(vertices.size()); }

    int vertex_of(int h) const {
        for (int v = 0; v < num_vertices(); ++v)
            for (int x : vertices[v])
                if (x == h) return v;
        throw std::invalid_argument("vertex_of: unknown half-edge");
    }

    /// Map half-edge -> vertex for the whole graph in one pass. Assumes the
    /// blocks partition the half-edges; validate() checks that separately.
    std::vector<int> vertex_map() const {
        std::vector<int> vm(num_half_edges(), -1);
        for (int v = 0; v < num_vertices(); ++v)
            for (int h : vertices[v])
                if (h >= 0 && h < num_half_edges()) vm[h] = v;
        return vm;
    }

    /// True iff every half-edge id lies in exactly one vertex block.
    bool blocks_partition_half_edges() const {
        std::vector<int> count(num_half_edges(), 0);
        for (const auto& block : vertices)
            for (int h : block) {
                if (h < 0 || h >= num_half_edges()) return false;
                ++count[h];
            }
        for (int c : count)
            if (c != 1) return false;
        return true;
    }

    int valence(int v) const { return static_cast<int>(vertices[v].size()); }

    int num_legs() const {
        int n = 0;
        for (int h = 0; h < num_half_edges(); ++h)
            if (partner[h] < 0) ++n;
        return n;
    }

    /// Edges as pairs (h, partner[h]) with h < partner[h], ascending.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int h = 0; h < num_half_edges(); ++h)
            if (partner[h] > h) e.emplace_back(h, partner[h]);
        return e;
    }

    int num_edges() const { return static_cast<int>(edges().size()); }

    int first_betti() const { return num_edges() - num_vertices() + 1; }

    int total_genus() const {
        int g = first_betti();
        for (int gv : genus) g += gv;
        return g;
    }

    /// Edge multiplicity between vertices (i != j), loops counted at (i,i).
    std::vector<std::vector<int>> adjacency() const {
        auto vm = vertex_map();
        std::vector<std::vector<int>> m(num_vertices(),
                                        std::vector<int>(num_vertices(), 0));
        for (auto [h, p] : edges()) {
            int a = vm[h], b = vm[p];
            if (a == b) m[a][a] += 1;
            else { m[a][b] += 1; m[b][a] += 1; }
        }
        return m;
    }

    int loops_at(int v) const { return adjacency()[v][v]; }

    /// Leg labels at a vertex, ascending.
    std::vector<int> legs_at(int v) const {
        std::vector<int> l;
        for (int h : vertices[v])
            if (partner[h] < 0) l.push_back(leg_label[h]);
        std::sort(l.begin(), l.end());
        return l;
    }

    bool is_connected() const {
        int V = num_vertices();
        if (V == 0) return false;
        std::vector<int> parent(V);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto vm = vertex_map();
        for (auto [h, p] : edges()) parent[find(vm[h])] = find(vm[p]);
        int root = find(0);
        for (int v = 1; v < V; ++v)
            if (find(v) != root) return false;
        return true;
    }
};

/// Builds a graph from vertex genera, edges as vertex pairs, and legs as
/// (vertex, label) pairs. Half-edge ids: edges first (two per edge, in input
/// order), then legs in input order.
inline StableGraph make_graph(std::vector<int> genera,
                              const std::vector<std::pair<int, int>>& edge_list,
                              const std::vector<std::pair<int, int>>& legs) {
    StableGraph g;
    g.genus = std::move(genera);
    g.vertices.resize(g.genus.size());
    int h = 0;
    for (auto [a, b] : edge_list) {
        g.partner.push_back(h + 1);
        g.partner.push_back(h);
        g.leg_label.push_back(0);
        g.leg_label.push_back(0);
        g.vertices.at(a).push_back(h);
        g.vertices.at(b).push_back(h + 1);
        h += 2;
    }
    for (auto [v, label] : legs) {
        g.partner.push_back(-1);
        g.leg_label.push_back(label);
        g.vertices.at(v).push_back(h);
        ++h;
    }
    return g;
}

struct ValidationResult {
    bool ok = true;
    std::string violation;
};

/// Total validity check; reports the first violated invariant by name.
inline ValidationResult validate(const StableGraph& g) {
    auto fail = [](std::string msg) { return ValidationResult{false, std::move(msg)}; };
    if (g.num_vertices() == 0) return fail("structure: no vertices");
    if (g.partner.size() != g.leg_label.size())
        return fail("structure: partner/leg_label size mismatch");
    if (static_cast<int>(g.genus.size()) != g.num_vertices())
        return fail("structure: genus size mismatch");
    if (!g.blocks_partition_half_edges())
        return fail("structure: vertices do not partition the half-edges");
    for (int h = 0; h < g.num_half_edges(); ++h) {
        int p = g.partner[h];
        if (p == -1) {
            if (g.leg_label[h] < 1) return fail("legs: external half-edge without label");
            continue;
        }
        if (p < 0 || p >= g.num_half_edges() || p == h)
            return fail("involution: not fixed-point-free");
        if (g.partner[p] != h) return fail("involution: not an involution");
        if (g.leg_label[h] != 0) return fail("legs: internal half-edge carries a label");
    }
    std::set<int> labels;
    int n = 0;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.partner[h] < 0) { labels.insert(g.leg_label[h]); ++n; }
    if (static_cast<int>(labels.size()) != n ||
        (n > 0 && (*labels.begin() != 1 || *labels.rbegin() != n)))
        return fail("legs: labels are not exactly {1..n}");
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.genus[v] < 0) return fail("genus: negative vertex genus");
    if (!g.is_connected()) return fail("connectivity: graph is not connected");
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.genus[v] == 0 && g.valence(v) < 3)
            return fail("stability: genus-0 vertex of valence < 3");
        if (g.genus[v] == 1 && g.valence(v) < 1)
            return fail("stability: genus-1 vertex of valence 0");
    }
    return {};
}

/// Stable quotient collapsing one internal edge, given by one of its
/// half-edges. A loop adds 1 to its vertex genus; a non-loop edge merges the
/// endpoints and adds their genera.
inline StableGraph contract_edge(const StableGraph& g, int h) {
    if (h < 0 || h >= g.num_half_edges())
        throw std::invalid_argument("contract_edge: no such half-edge");
    int p = g.partner[h];
    if (p < 0) throw std::invalid_argument("contract_edge: external legs cannot be contracted");
    auto vm = g.vertex_map();
    int v = vm[h], w = vm[p];

    std::vector<int> remap(g.num_half_edges(), -1);
    int next = 0;
    for (int x = 0; x < g.num_half_edges(); ++x)
        if (x != h && x != p) remap[x] = next++;

    StableGraph out;
    out.partner.resize(next);
    out.leg_label.resize(next);
    for (int x = 0; x < g.num_half_edges(); ++x) {
        if (remap[x] < 0) continue;
        out.partner[remap[x]] = g.partner[x] < 0 ? -1 : remap[g.partner[x]];
        out.leg_label[remap[x]] = g.leg_label[x];
    }
    for (int u = 0; u < g.num_vertices(); ++u) {
        if (w != v && u == w) continue;
        std::vector<int> block;
        for (int x : g.vertices[u])
            if (remap[x] >= 0) block.push_back(remap[x]);
        if (v == u && w != v)
            for (int x : g.vertices[w])
                if (remap[x] >= 0) block.push_back(remap[x]);
        std::sort(block.begin(), block.end());
        out.vertices.push_back(std::move(block));
        if (u == v)
            out.genus.push_back(v == w ? g.genus[v] + 1 : g.genus[v] + g.genus[w]);
        else
            out.genus.push_back(g.genus[u]);
    }
    return out;
}

/// The unique stable quotient with no edge between two distinct genus-0
/// vertices, reached by repeatedly contracting such edges. The result is
/// independent of the contraction order (tested against seeded orders).
inline StableGraph coarsen(const StableGraph& g) {
    StableGraph cur = g;
    for (;;) {
        auto vm = cur.vertex_map();
        int pick = -1;
        for (auto [h, p] : cur.edges()) {
            int a = vm[h], b = vm[p];
            if (a != b && cur.genus[a] == 0 && cur.genus[b] == 0) { pick = h; break; }
        }
        if (pick < 0) return cur;
        cur = contract_edge(cur, pick);
    }
}

/// Coarsening with a seeded random choice of which qualifying edge to
/// contract at each step; used to assert order-independence.
inline StableGraph coarsen_seeded(const StableGraph& g, unsigned seed) {
    std::mt19937 rng(seed);
    StableGraph cur = g;
    for (;;) {
        auto vm = cur.vertex_map();
        std::vector<int> picks;
        for (auto [h, p] : cur.edges()) {
            int a = vm[h], b = vm[p];
            if (a != b && cur.genus[a] == 0 && cur.genus[b] == 0) picks.push_back(h);
        }
        if (picks.empty()) return cur;
        cur = contract_edge(cur, picks[rng() % picks.size()]);
    }
}

/// Entry 0: number of edges joining a genus-0 vertex to a genus->=1 vertex;
/// entry i>=1: number of genus-i vertices. Trailing zeros trimmed.
inline std::vector<long long> s_vector(const StableGraph& g) {
    int maxg = 0;
    for (int gv : g.genus) maxg = std::max(maxg, gv);
    std::vector<long long> s(maxg + 1, 0);
    auto vm = g.vertex_map();
    for (auto [h, p] : g.edges()) {
        int a = g.genus[vm[h]], b = g.genus[vm[p]];
        if ((a == 0) != (b == 0)) ++s[0];
    }
    for (int gv : g.genus)
        if (gv >= 1) ++s[gv];
    while (s.size() > 1 && s.back() == 0) s.pop_back();
    return s;
}

/// Reverse-lexicographic order: the highest differing index decides.
inline bool s_vector_less(const std::vector<long long>& a,
                          const std::vector<long long>& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
        long long x = i < a.size() ? a[i] : 0;
        long long y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

/// Dimension of the stratum with this dual graph: sum_v (3 g(v) - 3 + n(v)).
inline int stratum_dimension(const StableGraph& g) {
    int d = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        d += 3 * g.genus[v] - 3 + g.valence(v);
    return d;
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

/// Canonical encoding of a stable graph up to isomorphism fixing external
/// labels (or, with an explicit coloring, fixing legs only up to color).
/// Vertices of such a graph are determined by (genus, leg multiset) plus the
/// edge multiplicity matrix, so the code is the lexicographic minimum over
/// vertex orderings of
///   [V, then per vertex: genus, #legs, leg colors..., adjacency row so far].
/// Refinement classes seed the search order; branch-and-bound prunes it.
class CanonicalForm {
public:
    using Code = std::vector<long long>;

    /// leg_color empty: color legs by their label (fully labelled graphs).
    static Code code(const StableGraph& g, const std::vector<int>& leg_color = {}) {
        CanonicalForm cf(g, leg_color);
        return cf.run();
    }

    /// Rebuilds the canonical representative from a code produced with label
    /// coloring (the default). Vertex and half-edge order are deterministic.
    static StableGraph graph_from_code(const Code& code) {
        size_t pos = 0;
        auto next = [&]() { return code.at(pos++); };
        int V = static_cast<int>(next());
        std::vector<int> genera(V);
        std::vector<std::vector<int>> legs(V);
        std::vector<std::vector<int>> adj(V, std::vector<int>(V, 0));
        for (int i = 0; i < V; ++i) {
            genera[i] = static_cast<int>(next());
            int nl = static_cast<int>(next());
            for (int k = 0; k < nl; ++k) legs[i].push_back(static_cast<int>(next()));
            for (int j = 0; j <= i; ++j) adj[j][i] = adj[i][j] = static_cast<int>(next());
        }
        std::vector<std::pair<int, int>> edge_list;
        for (int i = 0; i < V; ++i) {
            for (int k = 0; k < adj[i][i]; ++k) edge_list.emplace_back(i, i);
            for (int j = i + 1; j < V; ++j)
                for (int k = 0; k < adj[i][j]; ++k) edge_list.emplace_back(i, j);
        }
        std::vector<std::pair<int, int>> leg_list;
        for (int i = 0; i < V; ++i)
            for (int l : legs[i]) leg_list.emplace_back(i, l);
        return make_graph(genera, edge_list, leg_list);
    }

private:
    const StableGraph& g_;
    int V_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> gen_;
    std::vector<std::vector<int>> legs_;  // sorted colors per vertex
    Code best_;
    bool have_best_ = false;

    CanonicalForm(const StableGraph& g, const std::vector<int>& leg_color)
        : g_(g), V_(g.num_vertices()), adj_(g.adjacency()), gen_(g.genus) {
        legs_.resize(V_);
        auto vm = g.vertex_map();
        for (int h = 0; h < g.num_half_edges(); ++h)
            if (g.partner[h] < 0) {
                int c = leg_color.empty() ? g.leg_label[h] : leg_color.at(h);
                legs_[vm[h]].push_back(c);
            }
        for (auto& l : legs_) std::sort(l.begin(), l.end());
    }

    // Iterated refinement: split vertex classes by (genus, legs) and then by
    // the multiset of (class, multiplicity) over incident edges.
    std::vector<int> refine() const {
        std::vector<int> cls(V_);
        {
            std::vector<std::pair<std::vector<long long>, int>> keys;
            for (int v = 0; v < V_; ++v) {
                std::vector<long long> k{gen_[v], (long long)legs_[v].size()};
                for (int c : legs_[v]) k.push_back(c);
                k.push_back(adj_[v][v]);
                keys.push_back({std::move(k), v});
            }
            std::sort(keys.begin(), keys.end());
            int id = 0;
            for (size_t i = 0; i < keys.size(); ++i) {
                if (i && keys[i].first != keys[i - 1].first) ++id;
                cls[keys[i].second] = id;
            }
        }
        for (int round = 0; round < V_; ++round) {
            std::vector<std::pair<std::vector<long long>, int>> keys;
            for (int v = 0; v < V_; ++v) {
                std::vector<std::pair<long long, long long>> nb;
                for (int u = 0; u < V_; ++u)
                    if (u != v && adj_[v][u] > 0) nb.push_back({cls[u], adj_[v][u]});
                std::sort(nb.begin(), nb.end());
                std::vector<long long> k{cls[v]};
                for (auto [c, m] : nb) { k.push_back(c); k.push_back(m); }
                keys.push_back({std::move(k), v});
            }
            std::sort(keys.begin(), keys.end());
            std::vector<int> next(V_);
            int id = 0;
            for (size_t i = 0; i < keys.size(); ++i) {
                if (i && keys[i].first != keys[i - 1].first) ++id;
                next[keys[i].second] = id;
            }
            if (next == cls) break;
            cls = next;
        }
        return cls;
    }

    void append_vertex(Code& code, const std::vector<int>& order, int v) const {
        code.push_back(gen_[v]);
        code.push_back(static_cast<long long>(legs_[v].size()));
        for (int c : legs_[v]) code.push_back(c);
        for (int j = 0; j < static_cast<int>(order.size()); ++j)
            code.push_back(adj_[order[j]][v]);
        code.push_back(adj_[v][v]);
    }

    // `tight` means the prefix built so far equals the prefix of best_; only
    // then may a larger entry prune the branch. Once the prefix goes strictly
    // below best_, every completion beats best_ and pruning must stop.
    void search(std::vector<int>& order, std::vector<bool>& used, Code& code,
                const std::vector<int>& cls, bool tight) {
        if (static_cast<int>(order.size()) == V_) {
            if (!have_best_ || code < best_) { best_ = code; have_best_ = true; }
            return;
        }
        // candidates sorted by refinement class, so a near-minimal order is
        // tried first and the bound kicks in early
        std::vector<std::pair<int, int>> cand;
        for (int v = 0; v < V_; ++v)
            if (!used[v]) cand.push_back({cls[v], v});
        std::sort(cand.begin(), cand.end());
        for (auto [c, v] : cand) {
            size_t mark = code.size();
            append_vertex(code, order, v);
            bool prune = false;
            bool next_tight = tight && have_best_;
            if (tight && have_best_) {
                for (size_t i = mark; i < code.size(); ++i) {
                    if (i >= best_.size()) { prune = true; break; }  // equal prefix, longer
                    if (code[i] != best_[i]) {
                        if (code[i] > best_[i]) prune = true;
                        else next_tight = false;  // strictly below best from here on
                        break;
                    }
                }
            }
            if (!prune) {
                order.push_back(v);
                used[v] = true;
                search(order, used, code, cls, next_tight);
                used[v] = false;
                order.pop_back();
            }
            code.resize(mark);
        }
    }

    Code run() {
        auto cls = refine();
        Code code{V_};
        std::vector<int> order;
        std::vector<bool> used(V_, false);
        search(order, used, code, cls, true);
        return best_;
    }
};

using GraphIsoClass = CanonicalForm::Code;

inline GraphIsoClass canonical_code(const StableGraph& g) {
    return CanonicalForm::code(g);
}

inline bool isomorphic(const StableGraph& a, const StableGraph& b) {
    return canonical_code(a) == canonical_code(b);
}

/// Compact printable id for a canonical code.
inline std::string code_id(const GraphIsoClass& code) {
    std::string s;
    for (size_t i = 0; i < code.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(code[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Automorphisms
// ---------------------------------------------------------------------------

/// Which half-edges the automorphism group permutes. The ambiguous reading of
/// loops at genus-0 vertices is exposed; AllHalfEdges is the default.
enum class AutDesignation { AllHalfEdges, ExcludeGenus0Loops };

/// Order of the group of permutations of designated half-edges fixing the
/// external labels pointwise and preserving the vertex partition, involution
/// and genus. Counted per vertex automorphism as a product of bundle
/// bijections (m! per parallel bundle, k! 2^k per designated loop cluster).
inline long long automorphism_group_order(
    const StableGraph& g, AutDesignation mode = AutDesignation::AllHalfEdges) {
    int V = g.num_vertices();
    auto adj = g.adjacency();
    std::vector<std::vector<int>> legs(V);
    for (int v = 0; v < V; ++v) legs[v] = g.legs_at(v);

    bool count_loops_at = true;
    auto designated_loops = [&](int v) {
        if (mode == AutDesignation::ExcludeGenus0Loops && g.genus[v] == 0) return 0;
        return adj[v][v];
    };

    long long total = 0;
    std::vector<int> sigma(V, -1);
    std::vector<bool> used(V, false);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == V) {
            long long ways = 1;
            for (int i = 0; i < V; ++i) {
                int k = designated_loops(i);
                long long lf = 1;
                for (int t = 1; t <= k; ++t) lf *= 2 * t;  // k! * 2^k
                ways *= lf;
                for (int j = i + 1; j < V; ++j) {
                    long long f = 1;
                    for (int t = 2; t <= adj[i][j]; ++t) f *= t;
                    ways *= f;
                }
            }
            total += ways;
            return;
        }
        for (int w = 0; w < V; ++w) {
            if (used[w]) continue;
            if (g.genus[w] != g.genus[v]) continue;
            if (legs[w] != legs[v]) continue;
            if (!legs[v].empty() && w != v) continue;  // legs fixed pointwise
            if (designated_loops(w) != designated_loops(v) &&
                mode == AutDesignation::AllHalfEdges) continue;
            if (mode == AutDesignation::ExcludeGenus0Loops) {
                int lv = (g.genus[v] == 0) ? 0 : adj[v][v];
                int lw = (g.genus[w] == 0) ? 0 : adj[w][w];
                if (lv != lw) continue;
                // designated degree must match even when loops are invisible
                int dv = g.valence(v) - 2 * (g.genus[v] == 0 ? adj[v][v] : 0);
                int dw = g.valence(w) - 2 * (g.genus[w] == 0 ? adj[w][w] : 0);
                if (dv != dw) continue;
            }
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (adj[u][v] != adj[sigma[u]][w]) { ok = false; break; }
            if (!ok) continue;
            sigma[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
            sigma[v] = -1;
        }
    };
    (void)count_loops_at;
    rec(rec, 0);
    return total;
}

/// Brute-force oracle: tries every permutation of the designated internal
/// half-edges (legs held fixed) and checks the defining conditions directly.
/// Intended for graphs with at most ~8 designated internal half-edges.
inline long long automorphism_group_order_bruteforce(
    const StableGraph& g, AutDesignation mode = AutDesignation::AllHalfEdges) {
    auto vm = g.vertex_map();
    std::vector<int> D;  // designated internal half-edges
    for (int h = 0; h < g.num_half_edges(); ++h) {
        if (g.partner[h] < 0) continue;
        if (mode == AutDesignation::ExcludeGenus0Loops) {
            int v = vm[h];
            if (g.genus[v] == 0 && vm[g.partner[h]] == v) continue;
        }
        D.push_back(h);
    }
    if (D.size() > 10)
        throw std::invalid_argument("automorphism brute force: too many half-edges");

    std::vector<int> perm(D.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> pos_in_D(g.num_half_edges(), -1);
    for (size_t i = 0; i < D.size(); ++i) pos_in_D[D[i]] = static_cast<int>(i);

    long long count = 0;
    do {
        auto image = [&](int h) {
            return pos_in_D[h] < 0 ? h : D[perm[pos_in_D[h]]];
        };
        // involution: designated partners map to partners
        bool ok = true;
        for (int h : D) {
            int p = g.partner[h];
            if (pos_in_D[p] >= 0) {
                if (image(p) != g.partner[image(h)]) { ok = false; break; }
            }
        }
        if (!ok) continue;
        // partition: blocks map into blocks consistently and injectively,
        // preserving genus and designated block sizes; legs are fixed
        // half-edges, so their vertices cannot move
        std::vector<int> blockmap(g.num_vertices(), -1);
        std::vector<int> dcount(g.num_vertices(), 0), dimage(g.num_vertices(), 0);
        for (int h = 0; h < g.num_half_edges(); ++h)
            if (g.partner[h] < 0) blockmap[vm[h]] = vm[h];
        for (int h : D) {
            int v = vm[h], w = vm[image(h)];
            ++dcount[v];
            ++dimage[w];
            if (blockmap[v] == -1) blockmap[v] = w;
            else if (blockmap[v] != w) { ok = false; break; }
        }
        if (!ok) continue;
        std::vector<bool> hit(g.num_vertices(), false);
        for (int v = 0; v < g.num_vertices() && ok; ++v) {
            if (blockmap[v] < 0) continue;
            int w = blockmap[v];
            if (hit[w]) ok = false;
            hit[w] = true;
            if (g.genus[v] != g.genus[w]) ok = false;
            if (dcount[v] != dimage[w]) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json graph_to_json(const StableGraph& g) {
    nlohmann::ordered_json j;
    j["half_edges"] = g.num_half_edges();
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& block : g.vertices) {
        auto sorted = block;
        std::sort(sorted.begin(), sorted.end());
        j["vertices"].push_back(sorted);
    }
    auto inv = nlohmann::ordered_json::array();
    for (auto [h, p] : g.edges()) inv.push_back({h, p});
    j["involution"] = inv;
    auto legs = nlohmann::ordered_json::object();
    std::map<int, int> by_label;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.partner[h] < 0) by_label[g.leg_label[h]] = h;
    for (auto [label, h] : by_label) legs[std::to_string(label)] = h;
    j["legs"] = legs;
    auto genus = nlohmann::ordered_json::object();
    for (int v = 0; v < g.num_vertices(); ++v)
        genus[std::to_string(v)] = g.genus[v];
    j["genus"] = genus;
    return j;
}

inline StableGraph graph_from_json(const nlohmann::json& j) {
    StableGraph g;
    int H = j.at("half_edges").get<int>();
    g.partner.assign(H, -1);
    g.leg_label.assign(H, 0);
    for (const auto& block : j.at("vertices"))
        g.vertices.push_back(block.get<std::vector<int>>());
    for (const auto& pair : j.at("involution")) {
        int a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
        if (a < 0 || b < 0 || a >= H || b >= H)
            throw std::invalid_argument("graph_from_json: involution out of range");
        g.partner[a] = b;
        g.partner[b] = a;
    }
    for (auto it = j.at("legs").begin(); it != j.at("legs").end(); ++it) {
        int h = it.value().get<int>();
        if (h < 0 || h >= H) throw std::invalid_argument("graph_from_json: leg out of range");
        g.leg_label[h] = std::stoi(it.key());
    }
    g.genus.assign(g.vertices.size(), 0);
    for (auto it = j.at("genus").begin(); it != j.at("genus").end(); ++it) {
        size_t v = std::stoul(it.key());
        if (v >= g.genus.size()) throw std::invalid_argument("graph_from_json: genus key out of range");
        g.genus[v] = it.value().get<int>();
    }
    return g;
}

/// DOT export: internal vertices as circles labelled by genus, legs as boxes
/// labelled by their index.
inline std::string graph_to_dot(const StableGraph& g, const std::string& name = "G") {
    std::string out = "graph " + name + " {\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        out += "  v" + std::to_string(v) + " [shape=circle,label=\"g=" +
               std::to_string(g.genus[v]) + "\"];\n";
    std::map<int, int> leg_vertex;
    auto vm = g.vertex_map();
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.partner[h] < 0) leg_vertex[g.leg_label[h]] = vm[h];
    for (auto [label, v] : leg_vertex) {
        out += "  l" + std::to_string(label) + " [shape=box,label=\"" +
               std::to_string(label) + "\"];\n";
        out += "  v" + std::to_string(v) + " -- l" + std::to_string(label) + ";\n";
    }
    for (auto [h, p] : g.edges())
        out += "  v" + std::to_string(vm[h]) + " -- v" + std::to_string(vm[p]) + ";\n";
    out += "}\n";
    return out;
}

} // namespace strata
