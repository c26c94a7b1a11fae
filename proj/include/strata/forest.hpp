#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/stable_graph.hpp"
#include "strata/surjection.hpp"

namespace strata {

/// Node of a rooted binary tree: a labelled leaf or an internal node with
/// exactly two children. Children are kept sorted by minimal leaf label, so
/// equal trees compare equal structurally.
struct FTree {
    int leaf = -1;               // leaf label, or -1 for internal nodes
    std::vector<FTree> kids;     // empty or exactly two

    bool is_leaf() const { return leaf >= 0; }

    int min_leaf() const {
        if (is_leaf()) return leaf;
        int m = kids[0].min_leaf();
        for (size_t i = 1; i < kids.size(); ++i) m = std::min(m, kids[i].min_leaf());
        return m;
    }

    void leaves(std::vector<int>& out) const {
        if (is_leaf()) { out.push_back(leaf); return; }
        for (const auto& k : kids) k.leaves(out);
    }

    void normalize() {
        for (auto& k : kids) k.normalize();
        std::sort(kids.begin(), kids.end(), [](const FTree& a, const FTree& b) {
            return a.min_leaf() < b.min_leaf();
        });
    }

    std::string str() const {
        if (is_leaf()) return std::to_string(leaf);
        return "(" + kids[0].str() + "," + kids[1].str() + ")";
    }

    friend bool operator==(const FTree& a, const FTree& b) {
        if (a.leaf != b.leaf || a.kids.size() != b.kids.size()) return false;
        for (size_t i = 0; i < a.kids.size(); ++i)
            if (!(a.kids[i] == b.kids[i])) return false;
        return true;
    }
};

inline FTree fleaf(int label) { FTree t; t.leaf = label; return t; }
inline FTree fnode(FTree a, FTree b) {
    FTree t;
    t.kids = {std::move(a), std::move(b)};
    t.normalize();
    return t;
}

/// A morphism of the binary-forest category: an ordered collection of rooted
/// binary trees, roots labelled bijectively by [num_roots] (tree i+1 at index
/// i), leaves labelled bijectively by [num_leaves].
struct BinaryForest {
    int num_leaves = 0;
    int num_roots = 0;
    std::vector<FTree> trees;  // index r-1 = tree with root label r

    BinaryForest() = default;
    BinaryForest(int leaves, int roots, std::vector<FTree> t)
        : num_leaves(leaves), num_roots(roots), trees(std::move(t)) {
        if (!well_formed()) throw std::invalid_argument("BinaryForest: malformed");
    }

    static BinaryForest identity(int n) {
        std::vector<FTree> t;
        for (int i = 1; i <= n; ++i) t.push_back(fleaf(i));
        return BinaryForest(n, n, std::move(t));
    }

    bool well_formed() const {
        if (static_cast<int>(trees.size()) != num_roots) return false;
        std::vector<int> all;
        for (const auto& t : trees) {
            if (!binary(t)) return false;
            t.leaves(all);
        }
        std::sort(all.begin(), all.end());
        if (static_cast<int>(all.size()) != num_leaves) return false;
        for (int i = 0; i < num_leaves; ++i)
            if (all[i] != i + 1) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (int r = 0; r < num_roots; ++r) {
            if (r) s += " ";
            s += std::to_string(r + 1) + ":" + trees[r].str();
        }
        return s;
    }

    friend bool operator==(const BinaryForest& a, const BinaryForest& b) {
        return a.num_leaves == b.num_leaves && a.num_roots == b.num_roots &&
               a.trees == b.trees;
    }

private:
    static bool binary(const FTree& t) {
        if (t.is_leaf()) return t.kids.empty();
        if (t.kids.size() != 2) return false;
        return binary(t.kids[0]) && binary(t.kids[1]);
    }
};

/// The leaf-to-root surjection of a forest.
inline Surjection forest_to_surjection(const BinaryForest& f) {
    std::vector<int> v(f.num_leaves, 0);
    for (int r = 0; r < f.num_roots; ++r) {
        std::vector<int> ls;
        f.trees[r].leaves(ls);
        for (int l : ls) v[l - 1] = r + 1;
    }
    return Surjection(f.num_leaves, f.num_roots, std::move(v));
}

namespace detail_forest {
inline FTree substitute_leaves(const FTree& t, const std::vector<FTree>& by_root) {
    if (t.is_leaf()) return by_root.at(t.leaf - 1);
    FTree out = fnode(substitute_leaves(t.kids[0], by_root),
                      substitute_leaves(t.kids[1], by_root));
    return out;
}
} // namespace detail_forest

/// Gluing composition: the roots of `first` are matched with the leaves of
/// `second`; the result maps the leaves of `first` to the roots of `second`.
inline BinaryForest compose_forests(const BinaryForest& first,
                                    const BinaryForest& second) {
    if (first.num_roots != second.num_leaves)
        throw std::invalid_argument("compose_forests: arity mismatch");
    std::vector<FTree> trees;
    for (const auto& t : second.trees)
        trees.push_back(detail_forest::substitute_leaves(t, first.trees));
    return BinaryForest(first.num_leaves, second.num_roots, std::move(trees));
}

/// All binary trees on a given leaf label set, up to child order.
inline std::vector<FTree> enumerate_trees(const std::vector<int>& leaves) {
    if (leaves.empty()) return {};
    if (leaves.size() == 1) return {fleaf(leaves[0])};
    std::vector<FTree> out;
    int k = static_cast<int>(leaves.size());
    // split off the subset containing leaves[0] to fix child order
    for (unsigned mask = 0; mask + 1 < (1u << (k - 1)); ++mask) {
        std::vector<int> left{leaves[0]}, right;
        for (int i = 1; i < k; ++i)
            ((mask >> (i - 1)) & 1u ? left : right).push_back(leaves[i]);
        if (right.empty()) continue;
        for (const auto& lt : enumerate_trees(left))
            for (const auto& rt : enumerate_trees(right))
                out.push_back(fnode(lt, rt));
    }
    return out;
}

/// All binary forests with n leaves and m roots (n >= m >= 1).
inline std::vector<BinaryForest> enumerate_forests(int n, int m) {
    std::vector<BinaryForest> out;
    if (n < m || m < 1) return out;
    // assign each leaf to a root, then build all tree shapes per fiber
    for (const auto& h : enumerate_surjections(n, m)) {
        std::vector<std::vector<int>> fibers(m);
        for (int i = 1; i <= n; ++i) fibers[h(i) - 1].push_back(i);
        std::vector<std::vector<FTree>> choices;
        for (int r = 0; r < m; ++r) choices.push_back(enumerate_trees(fibers[r]));
        std::vector<FTree> pick(m);
        std::function<void(int)> rec = [&](int r) {
            if (r == m) {
                out.emplace_back(n, m, pick);
                return;
            }
            for (const auto& t : choices[r]) { pick[r] = t; rec(r + 1); }
        };
        rec(0);
    }
    return out;
}

/// True iff every surjection [n] -> [m] is the leaf-to-root map of some
/// forest, checked by generating forests and comparing image sets.
inline bool forest_fullness_check(int n, int m) {
    std::set<Surjection> want;
    for (auto& s : enumerate_surjections(n, m)) want.insert(s);
    std::set<Surjection> got;
    for (auto& f : enumerate_forests(n, m)) got.insert(forest_to_surjection(f));
    return want == got;
}

/// Glues the forest onto the external legs of a stable graph: the tree with
/// root label i is attached at leg i as a chain of trivalent genus-0
/// vertices; its leaves become the new legs. A bare root relabels the leg.
/// The result has the forest's leaves as its legs; the genus is unchanged.
inline StableGraph glue_forest_on_graph(const BinaryForest& f, const StableGraph& g) {
    if (f.num_roots != g.num_legs())
        throw std::invalid_argument("glue_forest_on_graph: arity mismatch");
    StableGraph out = g;
    // leg label -> half-edge id in `out`
    std::vector<int> leg_half(f.num_roots + 1, -1);
    for (int h = 0; h < out.num_half_edges(); ++h)
        if (out.partner[h] < 0) leg_half[out.leg_label[h]] = h;

    auto new_half = [&](int vertex, int partner, int label) {
        int h = out.num_half_edges();
        out.partner.push_back(partner);
        out.leg_label.push_back(label);
        out.vertices[vertex].push_back(h);
        return h;
    };

    std::function<void(const FTree&, int)> attach = [&](const FTree& t, int stub) {
        // `stub` is a half-edge waiting for this subtree
        if (t.is_leaf()) {
            out.leg_label[stub] = t.leaf;
            out.partner[stub] = -1;
            return;
        }
        out.vertices.push_back({});
        out.genus.push_back(0);
        int v = out.num_vertices() - 1;
        int up = new_half(v, stub, 0);
        out.partner[stub] = up;
        out.leg_label[stub] = 0;
        for (const auto& kid : t.kids) {
            int down = new_half(v, -2, 0);  // partner patched by the recursion
            attach(kid, down);
        }
    };

    for (int r = 1; r <= f.num_roots; ++r) {
        const FTree& t = f.trees[r - 1];
        int stub = leg_half[r];
        if (t.is_leaf()) {
            out.leg_label[stub] = t.leaf;
        } else {
            attach(t, stub);
        }
    }
    return out;
}

} // namespace strata
