#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "strata/enumerate.hpp"
#include "strata/stable_graph.hpp"

namespace strata {

constexpr int kLegA = 0;
constexpr int kLegB = 1;

/// A stable graph together with a split of its legs into class [a]
/// (labels 1..a_count) and class [b] (the rest).
struct BipartitionedLegGraph {
    StableGraph graph;
    int a_count = 0;

    int color_of_label(int label) const { return label <= a_count ? kLegA : kLegB; }

    int b_legs_at(int v) const {
        int c = 0;
        for (int l : graph.legs_at(v))
            if (color_of_label(l) == kLegB) ++c;
        return c;
    }
    int a_legs_at(int v) const {
        return static_cast<int>(graph.legs_at(v).size()) - b_legs_at(v);
    }

    std::vector<int> leg_colors() const {
        std::vector<int> colors(graph.num_half_edges(), -1);
        for (int h = 0; h < graph.num_half_edges(); ++h)
            if (graph.partner[h] < 0) colors[h] = color_of_label(graph.leg_label[h]);
        return colors;
    }
};

/// Checks the three escape conditions of the fiber trichotomy for one graph.
struct TrichotomyReport {
    std::string graph_id;
    bool dim_exceeds = false;      // (1): stratum dimension > i
    bool b_cherry = false;         // (2): trivalent vertex with two class-b legs
    bool adjacent_b_pair = false;  // (3): adjacent trivalent vertices, each with a class-b leg
    std::string witness;

    bool any() const { return dim_exceeds || b_cherry || adjacent_b_pair; }
};

inline TrichotomyReport trichotomy_check(const BipartitionedLegGraph& H, int i) {
    TrichotomyReport r;
    const StableGraph& g = H.graph;
    if (stratum_dimension(g) > i) {
        r.dim_exceeds = true;
        r.witness = "dim=" + std::to_string(stratum_dimension(g));
        return r;
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.valence(v) == 3 && H.b_legs_at(v) >= 2) {
            r.b_cherry = true;
            r.witness = "v" + std::to_string(v);
            return r;
        }
    auto adj = g.adjacency();
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.valence(v) != 3 || H.b_legs_at(v) < 1) continue;
        for (int w = v + 1; w < g.num_vertices(); ++w)
            if (adj[v][w] > 0 && g.valence(w) == 3 && H.b_legs_at(w) >= 1) {
                r.adjacent_b_pair = true;
                r.witness = "v" + std::to_string(v) + ",v" + std::to_string(w);
                return r;
            }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Shape-level fiber enumeration
//
// The fiber over the one-vertex graph J (e loops, legs split a / b) consists
// of the connected all-genus-0 stable graphs with first Betti number e and
// matching legs: contracting every internal non-loop edge recovers J. Leg
// classes, not labels, decide the trichotomy, so shapes are enumerated with
// 2-colored legs. Trees (e = 0) are generated rooted at their centroid;
// one-cycle graphs (e = 1) as a necklace of attachment multisets.
// ---------------------------------------------------------------------------

struct FiberConstraints {
    bool forbid_b_cherry = false;     // prune graphs satisfying (2)
    bool forbid_adjacent_b = false;   // prune graphs satisfying (3)
};

namespace detail_fiber {

struct RT {  // rooted subtree hanging from one upward edge
    std::string enc;
    int na = 0, nb = 0;
    int dim = 0;     // sum over internal nodes of (valence - 3)
    int vcount = 0;  // internal vertices (0 for a bare leaf)
    int kids = 0;    // children at the root node (0 for a leaf)
    int leaf_color = -1;
    bool root_b_leg = false;  // root node has a direct class-b leg child
    std::shared_ptr<const std::vector<RT>> children;

    bool is_leaf() const { return vcount == 0; }
    bool root_trivalent_as_subtree() const { return kids == 2; }
};

inline RT rt_leaf(int color) {
    RT t;
    t.enc = color == kLegA ? "a" : "b";
    (color == kLegA ? t.na : t.nb) = 1;
    t.leaf_color = color;
    return t;
}

/// Pools of rooted subtrees, grouped by (na, nb), each group sorted by enc.
class RTPools {
public:
    RTPools(int max_a, int max_b, int max_dim, const FiberConstraints& cons,
            Budget& budget)
        : max_a_(max_a), max_b_(max_b), max_dim_(max_dim), cons_(cons), budget_(budget) {
        pools_.assign(max_a + 1, std::vector<std::vector<RT>>(max_b + 1));
        if (max_a >= 1) pools_[1][0].push_back(rt_leaf(kLegA));
        if (max_b >= 1) pools_[0][1].push_back(rt_leaf(kLegB));
        // children of a level-`total` node live in strictly smaller levels,
        // so each level must be enc-sorted before the next level reads it
        for (int total = 2; total <= max_a + max_b; ++total) {
            for (int na = std::max(0, total - max_b); na <= std::min(total, max_a); ++na)
                build_nodes(na, total - na);
            for (int na = std::max(0, total - max_b); na <= std::min(total, max_a); ++na) {
                auto& group = pools_[na][total - na];
                std::sort(group.begin(), group.end(),
                          [](const RT& x, const RT& y) { return x.enc < y.enc; });
                for (size_t t = 1; t < group.size(); ++t)
                    if (group[t].enc == group[t - 1].enc)
                        throw std::logic_error("RTPools: duplicate subtree generated");
            }
        }
    }

    const std::vector<RT>& group(int na, int nb) const { return pools_[na][nb]; }
    int max_a() const { return max_a_; }
    int max_b() const { return max_b_; }

    /// Enumerates non-decreasing (by enc) sequences of `count_min`.. items
    /// with exact leg sums (na, nb) and total item dim <= dim_cap, calling
    /// `sink` with each complete multiset and its dim sum.
    void multisets(int na, int nb, int dim_cap, int count_min, int count_max,
                   const std::function<void(const std::vector<RT>&, int)>& sink) const {
        std::vector<RT> current;
        rec_multiset(na, nb, dim_cap, count_min, count_max, "", current, sink);
    }

private:
    int max_a_, max_b_, max_dim_;
    FiberConstraints cons_;
    Budget& budget_;
    std::vector<std::vector<std::vector<RT>>> pools_;

    void rec_multiset(int na, int nb, int dim_cap, int count_min, int count_max,
                      const std::string& min_enc, std::vector<RT>& current,
                      const std::function<void(const std::vector<RT>&, int)>& sink) const {
        if (na == 0 && nb == 0) {
            if (static_cast<int>(current.size()) >= count_min) {
                int dims = 0;
                for (auto& t : current) dims += t.dim;
                sink(current, dims);
            }
            return;
        }
        if (static_cast<int>(current.size()) >= count_max) return;
        for (int ga = 0; ga <= na; ++ga)
            for (int gb = 0; gb <= nb; ++gb) {
                if (ga + gb == 0) continue;
                const auto& g = pools_[ga][gb];
                auto it = std::lower_bound(g.begin(), g.end(), min_enc,
                                           [](const RT& t, const std::string& s) {
                                               return t.enc < s;
                                           });
                for (; it != g.end(); ++it) {
                    if (it->dim > dim_cap) continue;
                    current.push_back(*it);
                    rec_multiset(na - ga, nb - gb, dim_cap - it->dim, count_min,
                                 count_max, it->enc, current, sink);
                    current.pop_back();
                }
            }
    }

    void build_nodes(int na, int nb) {
        // a node with k >= 2 children costs (k - 2) dimension
        auto& target = pools_[na][nb];
        for (int k = 2; k <= na + nb && k - 2 <= max_dim_; ++k) {
            multisets(na, nb, max_dim_ - (k - 2), k, k,
                      [&](const std::vector<RT>& kids, int kid_dims) {
                          int dim = kid_dims + (k - 2);
                          if (dim > max_dim_) return;
                          if (!node_allowed(kids, k)) return;
                          budget_.tick("fiber pools");
                          RT t;
                          t.na = na;
                          t.nb = nb;
                          t.dim = dim;
                          t.kids = k;
                          t.vcount = 1;
                          std::string enc = "(";
                          for (auto& c : kids) {
                              enc += c.enc;
                              t.vcount += c.vcount;
                              if (c.is_leaf() && c.leaf_color == kLegB) t.root_b_leg = true;
                          }
                          enc += ")";
                          t.enc = std::move(enc);
                          t.children = std::make_shared<const std::vector<RT>>(kids);
                          target.push_back(std::move(t));
                      });
        }
    }

    bool node_allowed(const std::vector<RT>& kids, int k) const {
        bool trivalent = (k == 2);  // valence k + 1
        if (trivalent) {
            int b_leaves = 0;
            bool has_b = false;
            for (auto& c : kids)
                if (c.is_leaf() && c.leaf_color == kLegB) { ++b_leaves; has_b = true; }
            if (cons_.forbid_b_cherry && b_leaves >= 2) return false;
            if (cons_.forbid_adjacent_b && has_b)
                for (auto& c : kids)
                    if (!c.is_leaf() && c.root_trivalent_as_subtree() && c.root_b_leg)
                        return false;
        }
        return true;
    }
};

/// Materializes shapes into stable graphs with class-a legs labelled first.
class ShapeBuilder {
public:
    int add_vertex() {
        genus_.push_back(0);
        return static_cast<int>(genus_.size()) - 1;
    }
    void add_edge(int u, int v) { edges_.emplace_back(u, v); }
    void add_leg(int v, int color) { legs_.emplace_back(v, color); }

    /// Attaches a rooted subtree below `parent`; leaves become legs there.
    void attach(const detail_fiber::RT& t, int parent) {
        if (t.is_leaf()) { add_leg(parent, t.leaf_color); return; }
        int v = add_vertex();
        add_edge(parent, v);
        for (const auto& c : *t.children) attach(c, v);
    }

    BipartitionedLegGraph build() const {
        int a = 0;
        for (auto& [v, c] : legs_)
            if (c == kLegA) ++a;
        std::vector<std::pair<int, int>> labelled;
        int next_a = 1, next_b = a + 1;
        for (auto& [v, c] : legs_)
            labelled.emplace_back(v, c == kLegA ? next_a++ : next_b++);
        BipartitionedLegGraph out;
        out.graph = make_graph(genus_, edges_, labelled);
        out.a_count = a;
        return out;
    }

private:
    std::vector<int> genus_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::pair<int, int>> legs_;  // (vertex, color)
};

} // namespace detail_fiber

/// Enumerates, up to isomorphism respecting leg classes, the connected
/// all-genus-0 stable graphs with a class-a legs, b class-b legs, first
/// Betti number e (0 or 1) and stratum dimension <= i. Each shape is
/// reported once with a canonical id.
inline void enumerate_fiber_shapes(
    int a, int b, int e, int i, const FiberConstraints& cons, Budget& budget,
    const std::function<void(const std::string&, const BipartitionedLegGraph&)>& emit) {
    if (a < 0 || b < 0 || i < 0) throw std::invalid_argument("enumerate_fiber_shapes: bad sizes");
    if (e != 0 && e != 1)
        throw std::invalid_argument(
            "enumerate_fiber_shapes: only first Betti number 0 or 1 is supported");
    if (a + b + 2 * e < 3) return;  // no stable shape exists

    using detail_fiber::RT;
    detail_fiber::RTPools pools(a, b, i, cons, budget);

    auto emit_shape = [&](const std::string& enc,
                          const std::function<void(detail_fiber::ShapeBuilder&)>& make) {
        budget.tick("fiber shapes");
        detail_fiber::ShapeBuilder sb;
        make(sb);
        emit(enc, sb.build());
    };

    if (e == 0) {
        // centroid-rooted trees: top vertex with k >= 3 children, every child
        // subtree strictly smaller than half of the vertex count
        for (int k = 3; k <= a + b; ++k) {
            if (k - 3 > i) break;
            pools.multisets(a, b, i - (k - 3), k, k, [&](const std::vector<RT>& kids, int) {
                int vtotal = 1;
                int maxv = 0;
                for (auto& c : kids) { vtotal += c.vcount; maxv = std::max(maxv, c.vcount); }
                if (2 * maxv >= vtotal) return;  // top is not the unique centroid
                if (cons.forbid_b_cherry && k == 3) {
                    int bl = 0;
                    for (auto& c : kids)
                        if (c.is_leaf() && c.leaf_color == kLegB) ++bl;
                    if (bl >= 2) return;
                }
                if (cons.forbid_adjacent_b && k == 3) {
                    bool has_b = false;
                    for (auto& c : kids)
                        if (c.is_leaf() && c.leaf_color == kLegB) has_b = true;
                    if (has_b)
                        for (auto& c : kids)
                            if (!c.is_leaf() && c.root_trivalent_as_subtree() && c.root_b_leg)
                                return;
                }
                std::string enc = "T(";
                for (auto& c : kids) enc += c.enc;
                enc += ")";
                emit_shape(enc, [&](detail_fiber::ShapeBuilder& sb) {
                    int top = sb.add_vertex();
                    for (auto& c : kids) sb.attach(c, top);
                });
            });
        }
        // edge-centered trees: two equal-size rooted halves joined root to root
        for (int ga = 0; ga <= a; ++ga)
            for (int gb = 0; gb <= b; ++gb) {
                const auto& g1 = pools.group(ga, gb);
                // unordered pairs of groups, visited once
                if (std::make_pair(ga, gb) > std::make_pair(a - ga, b - gb)) continue;
                const auto& g2 = pools.group(a - ga, b - gb);
                bool same_group = (ga == a - ga && gb == b - gb);
                for (size_t x = 0; x < g1.size(); ++x) {
                    const RT& t1 = g1[x];
                    if (t1.is_leaf()) continue;
                    size_t y0 = same_group ? x : 0;
                    for (size_t y = y0; y < g2.size(); ++y) {
                        const RT& t2 = g2[y];
                        if (t2.is_leaf()) continue;
                        if (t1.vcount != t2.vcount) continue;
                        if (same_group && t2.enc < t1.enc) continue;
                        if (t1.dim + t2.dim > i) continue;
                        if (cons.forbid_adjacent_b && t1.root_trivalent_as_subtree() &&
                            t2.root_trivalent_as_subtree() && t1.root_b_leg && t2.root_b_leg)
                            continue;
                        std::string enc = "E(" + std::min(t1.enc, t2.enc) + "|" +
                                          std::max(t1.enc, t2.enc) + ")";
                        emit_shape(enc, [&](detail_fiber::ShapeBuilder& sb) {
                            int r1 = sb.add_vertex();
                            int r2 = sb.add_vertex();
                            sb.add_edge(r1, r2);
                            for (auto& c : *t1.children) sb.attach(c, r1);
                            for (auto& c : *t2.children) sb.attach(c, r2);
                        });
                    }
                }
            }
        return;
    }

    // e == 1, loop vertex: one vertex with a self edge and k >= 1 attachments
    for (int k = 1; k <= a + b; ++k) {
        if (k - 1 > i) break;
        pools.multisets(a, b, i - (k - 1), k, k, [&](const std::vector<RT>& kids, int) {
            // a trivalent loop vertex carries either one leg and no neighbor
            // or one subtree edge and no leg, so (2)/(3) cannot fire here
            std::string enc = "L(";
            for (auto& c : kids) enc += c.enc;
            enc += ")";
            emit_shape(enc, [&](detail_fiber::ShapeBuilder& sb) {
                int v = sb.add_vertex();
                sb.add_edge(v, v);
                for (auto& c : kids) sb.attach(c, v);
            });
        });
    }

    // e == 1, cycle of length c >= 2: a necklace of attachment multisets
    struct CyclePos {
        std::vector<RT> items;
        std::string enc;
        bool trivalent_b = false;  // trivalent with a direct class-b leg
        bool trivalent = false;
        int dim = 0;
    };
    for (int c = 2; c <= a + b; ++c) {
        std::vector<CyclePos> seq;
        std::function<void(int, int, int)> place = [&](int na_left, int nb_left, int dim_left) {
            int pos = static_cast<int>(seq.size());
            if (pos == c) {
                if (na_left != 0 || nb_left != 0) return;
                // necklace canonicity: the enc sequence must be minimal among
                // all rotations and reflections
                std::vector<std::string> encs;
                for (auto& p : seq) encs.push_back(p.enc);
                auto rotations_ok = [&]() {
                    for (int rot = 0; rot < c; ++rot)
                        for (int refl = 0; refl < 2; ++refl) {
                            std::vector<std::string> alt;
                            for (int t = 0; t < c; ++t) {
                                int idx = refl ? (rot - t % c + 2 * c) % c : (rot + t) % c;
                                alt.push_back(encs[idx]);
                            }
                            if (alt < encs) return false;
                        }
                    return true;
                };
                if (!rotations_ok()) return;
                if (cons.forbid_adjacent_b)
                    for (int t = 0; t < c; ++t)
                        if (seq[t].trivalent_b && seq[(t + 1) % c].trivalent_b) return;
                std::string enc = "C" + std::to_string(c) + "(";
                for (auto& p : seq) enc += p.enc;
                enc += ")";
                emit_shape(enc, [&](detail_fiber::ShapeBuilder& sb) {
                    std::vector<int> ring;
                    for (int t = 0; t < c; ++t) ring.push_back(sb.add_vertex());
                    for (int t = 0; t < c; ++t) sb.add_edge(ring[t], ring[(t + 1) % c]);
                    for (int t = 0; t < c; ++t)
                        for (auto& item : seq[t].items) sb.attach(item, ring[t]);
                });
                return;
            }
            int slots_after = c - pos - 1;
            for (int ka = 0; ka <= na_left; ++ka)
                for (int kb = 0; kb <= nb_left; ++kb) {
                    if (ka + kb == 0) continue;
                    if (na_left - ka + nb_left - kb < slots_after) continue;
                    pools.multisets(ka, kb, dim_left, 1, ka + kb,
                                    [&](const std::vector<RT>& items, int item_dims) {
                                        int kk = static_cast<int>(items.size());
                                        int vertex_dim = kk - 1;  // valence 2 + kk
                                        if (item_dims + vertex_dim > dim_left) return;
                                        CyclePos p;
                                        p.items = items;
                                        p.dim = item_dims + vertex_dim;
                                        p.trivalent = (kk == 1);
                                        p.trivalent_b = p.trivalent && items[0].is_leaf() &&
                                                        items[0].leaf_color == kLegB;
                                        p.enc = "{";
                                        for (auto& t : items) p.enc += t.enc;
                                        p.enc += "}";
                                        seq.push_back(std::move(p));
                                        place(na_left - ka, nb_left - kb,
                                              dim_left - seq.back().dim);
                                        seq.pop_back();
                                    });
                }
        };
        place(a, b, i);
    }
}

/// All labelled isomorphism classes H with coarsen(H) isomorphic to J and
/// stratum dimension <= i, generated by iterated genus-0 vertex splitting
/// from J and deduplicated on canonical forms. J must be a single genus-0
/// vertex (any number of loops) with labelled legs; every emitted graph is
/// rechecked against coarsen.
inline std::vector<StableGraph> enumerate_coarsening_fiber(const StableGraph& J, int i,
                                                           Budget& budget) {
    auto v = validate(J);
    if (!v.ok) throw std::invalid_argument("enumerate_coarsening_fiber: invalid J: " + v.violation);
    if (J.num_vertices() != 1 || J.genus[0] != 0)
        throw std::invalid_argument("enumerate_coarsening_fiber: J must be a single genus-0 vertex");

    auto j_code = canonical_code(J);
    std::set<GraphIsoClass> seen;
    std::vector<StableGraph> out;
    std::deque<StableGraph> queue;
    queue.push_back(J);
    seen.insert(j_code);
    while (!queue.empty()) {
        StableGraph cur = queue.front();
        queue.pop_front();
        if (stratum_dimension(cur) <= i) {
            if (canonical_code(coarsen(cur)) != j_code)
                throw std::logic_error("enumerate_coarsening_fiber: soundness recheck failed");
            out.push_back(cur);
        }
        // split any genus-0 vertex; both sides keep genus 0
        for (int vx = 0; vx < cur.num_vertices(); ++vx) {
            const auto& block = cur.vertices[vx];
            int k = static_cast<int>(block.size());
            if (k < 4) continue;
            for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
                std::vector<int> side_a{block[0]}, side_b;
                for (int t = 1; t < k; ++t)
                    ((mask >> (t - 1)) & 1u ? side_a : side_b).push_back(block[t]);
                if (side_a.size() < 2 || side_b.size() < 2) continue;
                StableGraph split = cur;
                int h_new = split.num_half_edges();
                split.partner.push_back(h_new + 1);
                split.partner.push_back(h_new);
                split.leg_label.push_back(0);
                split.leg_label.push_back(0);
                side_a.push_back(h_new);
                side_b.push_back(h_new + 1);
                split.vertices[vx] = side_a;
                split.vertices.push_back(side_b);
                split.genus.push_back(0);
                auto code = canonical_code(split);
                if (seen.insert(code).second) {
                    budget.tick("enumerate_coarsening_fiber");
                    queue.push_back(split);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const StableGraph& x, const StableGraph& y) {
        return canonical_code(x) < canonical_code(y);
    });
    return out;
}

} // namespace strata
