#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "strata/fiber.hpp"
#include "strata/hilbert.hpp"
#include "strata/stable_graph.hpp"

namespace strata {

// ---------------------------------------------------------------------------
// Leg-count bound verifier
//
// Conditions on a stable genus-g graph G:
//   (1) no edges between distinct genus-0 vertices,
//   (2) every genus >= 1 vertex has valence <= i+1,
//   (3) every genus-0 vertex with e self edges and a edges to other vertices
//       carries at most f(i, e, a) external legs.
// Asserted: n(G) <= (i+1) g + (i+1) g f(i, g, (i+1) g) for g >= 1; for g = 0
// the conditions force a single genus-0 vertex, bounded by f(i, 0, 0).
//
// Qualifying graphs decompose as a core of positive-genus vertices plus
// genus-0 satellites attached only to the core, so the search enumerates
// exactly that family (leg labels do not affect the conditions; shapes are
// deduplicated with colorless canonical forms).
// ---------------------------------------------------------------------------

struct Lemma41Report {
    int g = 0, i = 0;
    FCoeffs coeffs;
    long long bound = 0;
    std::string bound_kind;  // "composed" or "single-vertex"
    long long max_n = -1;
    long long shapes_checked = 0;
    bool all_pass = true;
    std::map<long long, long long> per_n;  // legs -> number of shapes
    std::string max_shape_dot;             // witness attaining max_n
};

namespace detail_l41 {

struct Satellite {
    int loops = 0;
    std::vector<int> attach;  // multiplicity per core vertex, sum >= 1
    int legs = 0;

    bool operator<(const Satellite& o) const {
        if (loops != o.loops) return loops < o.loops;
        if (attach != o.attach) return attach < o.attach;
        return legs < o.legs;
    }
};

class Search {
public:
    Search(int g, int i, FCoeffs coeffs, Budget& budget, Lemma41Report& rep)
        : g_(g), i_(i), coeffs_(coeffs), budget_(budget), rep_(rep) {}

    void run() {
        single_vertex_shapes();
        for (int P = 1; P <= g_; ++P) {
            core_genus_.assign(P, 1);
            gen_core_genus(P, 0, g_, g_);
        }
    }

private:
    int g_, i_;
    FCoeffs coeffs_;
    Budget& budget_;
    Lemma41Report& rep_;
    std::set<GraphIsoClass> seen_;
    StableGraph best_;

    std::vector<int> core_genus_;
    std::vector<std::pair<int, int>> core_edges_;
    std::vector<int> core_deg_;
    int hrem_ = 0;
    std::vector<Satellite> sats_;
    std::vector<int> used_;  // satellite attachment ends per core vertex

    void single_vertex_shapes() {
        std::vector<std::pair<int, int>> edges;
        for (int t = 0; t < g_; ++t) edges.emplace_back(0, 0);
        long long cap = coeffs_.eval(i_, g_, 0);
        for (long long legs = std::max(0, 3 - 2 * g_); legs <= cap; ++legs)
            consider({0}, edges, {static_cast<int>(legs)});
    }

    void gen_core_genus(int P, int idx, int maxval, int left) {
        if (idx == P) {
            hrem_ = left;
            core_edges_.clear();
            core_deg_.assign(P, 0);
            gen_core_edges(P, 0, 0);
            return;
        }
        int reserve = P - idx - 1;  // later vertices need genus >= 1 each
        for (int val = std::min(maxval, left - reserve); val >= 1; --val) {
            core_genus_[idx] = val;
            gen_core_genus(P, idx + 1, val, left - val);
        }
    }

    void gen_core_edges(int P, int x, int y) {
        if (x == P) {
            sats_.clear();
            used_.assign(P, 0);
            gen_satellites(P);
            return;
        }
        int nx = (y + 1 <= P - 1) ? x : x + 1;
        int ny = (y + 1 <= P - 1) ? y + 1 : nx;
        for (int mlt = 0;; ++mlt) {
            int dx = (x == y) ? 2 * mlt : mlt;
            if (core_deg_[x] + dx > i_ + 1) break;
            if (x != y && core_deg_[y] + mlt > i_ + 1) break;
            core_deg_[x] += dx;
            if (x != y) core_deg_[y] += mlt;
            for (int t = 0; t < mlt; ++t) core_edges_.emplace_back(x, y);
            gen_core_edges(P, nx, ny);
            for (int t = 0; t < mlt; ++t) core_edges_.pop_back();
            core_deg_[x] -= dx;
            if (x != y) core_deg_[y] -= mlt;
        }
    }

    int slack(int P) const {
        int s = 0;
        for (int v = 0; v < P; ++v) s += (i_ + 1) - core_deg_[v] - used_[v];
        return s;
    }

    void gen_satellites(int P) {
        finalize(P);
        if (slack(P) < 1) return;
        Satellite s;
        s.attach.assign(P, 0);
        gen_satellite_attach(P, s, 0, 0);
    }

    void gen_satellite_attach(int P, Satellite& s, int v, int total) {
        if (v == P) {
            if (total == 0) return;
            for (int loops = 0; loops <= hrem_; ++loops) {
                s.loops = loops;
                long long cap = coeffs_.eval(i_, loops, total);
                int lmin = std::max(0, 3 - 2 * loops - total);
                for (long long l = lmin; l <= cap; ++l) {
                    s.legs = static_cast<int>(l);
                    if (!sats_.empty() && s < sats_.back()) continue;
                    sats_.push_back(s);
                    for (int u = 0; u < P; ++u) used_[u] += s.attach[u];
                    gen_satellites(P);
                    for (int u = 0; u < P; ++u) used_[u] -= s.attach[u];
                    sats_.pop_back();
                }
            }
            return;
        }
        int room = (i_ + 1) - core_deg_[v] - used_[v];
        for (int mlt = 0; mlt <= room; ++mlt) {
            s.attach[v] = mlt;
            gen_satellite_attach(P, s, v + 1, total + mlt);
        }
        s.attach[v] = 0;
    }

    void finalize(int P) {
        int S = static_cast<int>(sats_.size());
        int E = static_cast<int>(core_edges_.size());
        for (auto& s : sats_)
            E += s.loops + std::accumulate(s.attach.begin(), s.attach.end(), 0);
        int V = P + S;
        if (E - V + 1 != hrem_) return;  // Betti mismatch (connected case)

        std::vector<std::pair<int, int>> edges = core_edges_;
        std::vector<int> genus(V, 0), legs(V, 0);
        for (int v = 0; v < P; ++v) genus[v] = core_genus_[v];
        for (int s = 0; s < S; ++s) {
            for (int t = 0; t < sats_[s].loops; ++t) edges.emplace_back(P + s, P + s);
            for (int v = 0; v < P; ++v)
                for (int t = 0; t < sats_[s].attach[v]; ++t) edges.emplace_back(P + s, v);
            legs[P + s] = sats_[s].legs;
        }
        gen_core_legs(P, 0, genus, edges, legs);
    }

    void gen_core_legs(int P, int v, const std::vector<int>& genus,
                       const std::vector<std::pair<int, int>>& edges,
                       std::vector<int>& legs) {
        if (v == P) {
            consider(genus, edges, legs);
            return;
        }
        int room = (i_ + 1) - core_deg_[v] - used_[v];
        for (int l = 0; l <= room; ++l) {
            legs[v] = l;
            gen_core_legs(P, v + 1, genus, edges, legs);
        }
        legs[v] = 0;
    }

    void consider(const std::vector<int>& genus,
                  const std::vector<std::pair<int, int>>& edges,
                  const std::vector<int>& legs_per_vertex) {
        budget_.tick("verify_lemma_41");
        long long n = 0;
        std::vector<std::pair<int, int>> leg_list;
        for (size_t v = 0; v < legs_per_vertex.size(); ++v)
            for (int t = 0; t < legs_per_vertex[v]; ++t)
                leg_list.emplace_back(static_cast<int>(v), static_cast<int>(++n));
        StableGraph cand = make_graph(genus, edges, leg_list);
        if (!validate(cand).ok) return;

        // independent re-check of the three conditions on the built graph
        auto adj = cand.adjacency();
        for (int u = 0; u < cand.num_vertices(); ++u) {
            if (cand.genus[u] >= 1 && cand.valence(u) > i_ + 1) return;
            for (int w = u + 1; w < cand.num_vertices(); ++w)
                if (cand.genus[u] == 0 && cand.genus[w] == 0 && adj[u][w] > 0) return;
            if (cand.genus[u] == 0) {
                int self = adj[u][u];
                int nlegs = static_cast<int>(cand.legs_at(u).size());
                int to_others = cand.valence(u) - 2 * self - nlegs;
                if (nlegs > coeffs_.eval(i_, self, to_others)) return;
            }
        }

        std::vector<int> colors(cand.num_half_edges(), 0);
        auto code = CanonicalForm::code(cand, colors);
        if (!seen_.insert(code).second) return;

        rep_.shapes_checked += 1;
        rep_.per_n[n] += 1;
        if (n > rep_.max_n) {
            rep_.max_n = n;
            best_ = cand;
        }
    }

public:
    const StableGraph& best() const { return best_; }
};

} // namespace detail_l41

inline Lemma41Report verify_lemma_41(int g, int i, FCoeffs coeffs = FCoeffs{},
                                     Budget* budget_in = nullptr) {
    if (g < 0 || i < 0) throw std::invalid_argument("verify_lemma_41: g, i >= 0 required");
    if (coeffs.r < 0 || coeffs.s < 0 || coeffs.t < 0)
        throw std::invalid_argument("verify_lemma_41: coefficients r, s, t must be >= 0");
    Budget local;
    Budget& budget = budget_in ? *budget_in : local;

    Lemma41Report rep;
    rep.g = g;
    rep.i = i;
    rep.coeffs = coeffs;
    if (g >= 1) {
        rep.bound = (long long)(i + 1) * g +
                    (long long)(i + 1) * g * coeffs.eval(i, g, (long long)(i + 1) * g);
        rep.bound_kind = "composed";
    } else {
        rep.bound = coeffs.eval(i, 0, 0);
        rep.bound_kind = "single-vertex";
    }

    detail_l41::Search search(g, i, coeffs, budget, rep);
    search.run();
    rep.all_pass = (rep.max_n <= rep.bound);
    if (rep.max_n >= 0) rep.max_shape_dot = graph_to_dot(search.best(), "Gmax");
    return rep;
}

// ---------------------------------------------------------------------------
// Trichotomy verifier
//
// For the one-vertex graph J with e self edges and legs split a / b, every
// graph in its coarsening fiber must satisfy (1) dimension > i, (2) a
// trivalent vertex with two class-b legs, or (3) two adjacent trivalent
// vertices each with a class-b leg, whenever b exceeds the threshold
// f(i, e, a). Two strategies:
//   direct    - enumerate the dimension-filtered fiber per b and test every
//               member (members above the dimension cut satisfy (1));
//   violators - enumerate, for every b up to a counting-argument cap, the
//               graphs violating all three conditions; the lemma holds iff
//               none of them has b above the threshold. This covers every
//               b at once and stays cheap when fibers are astronomically big.
// ---------------------------------------------------------------------------

struct Lemma42Options {
    FCoeffs coeffs{};
    enum class Mode { Auto, Direct, Violators } mode = Mode::Auto;
    int max_reports = 50;
};

struct Lemma42Report {
    int a = 0, e = 0, i = 0;
    long long threshold = 0;  // f(i, e, a)
    int b_min = 0, b_max = -1;
    std::string method;
    bool vacuous = false;  // direct range empty
    long long graphs_checked = 0;
    bool all_pass = true;
    bool budget_exceeded = false;
    long long violator_b_cap = -1;
    long long max_violating_b = -1;
    std::map<int, long long> fiber_sizes;
    std::vector<TrichotomyReport> failures;
    std::vector<TrichotomyReport> samples;
    long long reports_truncated = 0;
};

/// Upper bound on the class-b legs of any graph violating all three
/// conditions, from a stub-counting argument; used to make the violator
/// sweep provably exhaustive over b.
inline long long lemma42_violator_b_cap(int a, int e, int i) {
    // Connected, all genus 0, stable, Betti number e, dimension <= i, no
    // trivalent vertex with two class-b legs, no adjacent trivalent pair of
    // class-b carriers. With at least two vertices:
    //   vertices of valence > 3 number at most i and have total valence <= 4i;
    //   trivalent vertices with 2 legs need a class-a leg, so <= a of them,
    //   likewise <= a trivalent vertices with one class-a leg;
    //   the Euler count e - 1 = sum(deg_int/2 - 1) caps legless trivalent
    //   vertices at 2e - 2 + a + 2i;
    //   each trivalent class-b carrier spends two edge ends on non-carriers,
    //   whose ends number at most 3(2e-2+a+2i) + 2a + a + 4i.
    // Total class-b legs <= carriers + a + 4i. One-vertex graphs carry at
    // most 3 + i legs. A small margin is added; a violator found inside the
    // margin would falsify the count and is reported as an internal error.
    long long bare = std::max(0LL, 2LL * e - 2 + a + 2LL * i);
    long long ends = 3 * bare + 3LL * a + 4LL * i;
    long long cap_multi = ends / 2 + a + 4LL * i;
    long long cap_single = 3 + i;
    return std::max(cap_single, cap_multi) + 2;
}

inline Lemma42Report verify_lemma_42(int a, int e, int i, int b_max, int b_min = -1,
                                     Lemma42Options opts = {}, Budget* budget_in = nullptr) {
    if (a < 0 || e < 0 || i < 0)
        throw std::invalid_argument("verify_lemma_42: a, e, i >= 0 required");
    Budget local;
    Budget& budget = budget_in ? *budget_in : local;

    Lemma42Report rep;
    rep.a = a;
    rep.e = e;
    rep.i = i;
    rep.threshold = opts.coeffs.eval(i, e, a);

    int stable_lo = std::max(0, 3 - a - 2 * e);  // J must be stable
    rep.b_min = std::max(b_min < 0 ? static_cast<int>(rep.threshold) + 1 : b_min, stable_lo);
    rep.b_max = b_max;
    if (rep.b_min > rep.b_max) rep.vacuous = true;

    auto record = [&](const TrichotomyReport& t, bool pass) {
        if (!pass) {
            rep.all_pass = false;
            if (static_cast<int>(rep.failures.size()) < opts.max_reports) rep.failures.push_back(t);
            else ++rep.reports_truncated;
        } else if (static_cast<int>(rep.samples.size()) < opts.max_reports) {
            rep.samples.push_back(t);
        } else {
            ++rep.reports_truncated;
        }
    };

    auto run_direct = [&]() {
        for (int b = rep.b_min; b <= rep.b_max; ++b) {
            long long count = 0;
            enumerate_fiber_shapes(a, b, e, i, FiberConstraints{}, budget,
                                   [&](const std::string& id, const BipartitionedLegGraph& H) {
                                       ++count;
                                       ++rep.graphs_checked;
                                       TrichotomyReport t = trichotomy_check(H, i);
                                       t.graph_id = id;
                                       record(t, t.any());
                                   });
            rep.fiber_sizes[b] = count;
        }
    };

    auto run_violators = [&](Budget& vb) {
        rep.violator_b_cap = lemma42_violator_b_cap(a, e, i);
        FiberConstraints cons;
        cons.forbid_b_cherry = true;
        cons.forbid_adjacent_b = true;
        for (int b = 0; b <= rep.violator_b_cap; ++b) {
            enumerate_fiber_shapes(a, b, e, i, cons, vb,
                                   [&](const std::string& id, const BipartitionedLegGraph& H) {
                                       ++rep.graphs_checked;
                                       TrichotomyReport t = trichotomy_check(H, i);
                                       if (t.any())
                                           throw std::logic_error(
                                               "verify_lemma_42: constrained enumeration emitted "
                                               "a satisfying graph " + id);
                                       if (b >= rep.violator_b_cap - 1)
                                           throw std::logic_error(
                                               "verify_lemma_42: violator found inside the "
                                               "safety margin; counting bound falsified at b=" +
                                               std::to_string(b));
                                       rep.max_violating_b = std::max(rep.max_violating_b,
                                                                      (long long)b);
                                       t.graph_id = id;
                                       t.witness = "b=" + std::to_string(b);
                                       record(t, b <= rep.threshold);
                                   });
        }
        if (rep.max_violating_b >= 0 && rep.max_violating_b > rep.threshold)
            rep.all_pass = false;
    };

    using Mode = Lemma42Options::Mode;
    if (opts.mode == Mode::Direct) {
        rep.method = "direct";
        run_direct();
    } else if (opts.mode == Mode::Violators) {
        rep.method = "violators";
        run_violators(budget);
    } else {
        if (rep.vacuous) {
            rep.method = "violators(direct range empty)";
            run_violators(budget);
            return rep;
        }
        try {
            rep.method = "direct";
            run_direct();
        } catch (const BudgetExceeded&) {
            rep.budget_exceeded = true;
            rep.method = "violators(direct exceeded budget)";
            rep.fiber_sizes.clear();
            rep.graphs_checked = 0;
            rep.failures.clear();
            rep.samples.clear();
            rep.all_pass = true;
            Budget fresh(budget.limit());
            run_violators(fresh);
        }
    }
    return rep;
}

} // namespace strata
