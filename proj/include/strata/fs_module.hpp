#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "strata/matrix.hpp"
#include "strata/surjection.hpp"

namespace strata {

/// Linear map between module degrees, stored either as a basis map
/// (column j maps to basis vector map[j], coefficient 1) or densely.
struct Action {
    int rows = 0, cols = 0;
    std::optional<std::vector<int>> map;  // basis map: size == cols
    std::optional<RatMat> mat;

    static Action basis_map(int rows, std::vector<int> m) {
        Action a;
        a.rows = rows;
        a.cols = static_cast<int>(m.size());
        a.map = std::move(m);
        return a;
    }
    static Action dense(RatMat m) {
        Action a;
        a.rows = m.rows();
        a.cols = m.cols();
        a.mat = std::move(m);
        return a;
    }
    static Action identity(int n) {
        std::vector<int> m(n);
        std::iota(m.begin(), m.end(), 0);
        return basis_map(n, std::move(m));
    }

    bool is_basis_map() const { return map.has_value(); }

    Rat entry(int r, int c) const {
        if (map) return Rat((*map)[c] == r ? 1 : 0);
        return mat->at(r, c);
    }

    Rat trace() const {
        if (rows != cols) throw std::invalid_argument("Action: trace of non-square");
        if (map) {
            long long fixed = 0;
            for (int j = 0; j < cols; ++j)
                if ((*map)[j] == j) ++fixed;
            return Rat(fixed);
        }
        return mat->trace();
    }

    RatMat to_dense() const {
        if (mat) return *mat;
        RatMat m(rows, cols);
        for (int j = 0; j < cols; ++j) m.at((*map)[j], j) = Rat(1);
        return m;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (static_cast<int>(v.size()) != cols)
            throw std::invalid_argument("Action: size mismatch");
        if (map) {
            std::vector<Rat> r(rows);
            for (int j = 0; j < cols; ++j)
                if (!v[j].is_zero()) r[(*map)[j]] += v[j];
            return r;
        }
        return mat->apply(v);
    }

    friend bool operator==(const Action& a, const Action& b) {
        if (a.rows != b.rows || a.cols != b.cols) return false;
        if (a.map && b.map) return *a.map == *b.map;
        for (int r = 0; r < a.rows; ++r)
            for (int c = 0; c < a.cols; ++c)
                if (a.entry(r, c) != b.entry(r, c)) return false;
        return true;
    }
};

/// Matrix product A * B.
inline Action action_mul(const Action& a, const Action& b) {
    if (a.cols != b.rows) throw std::invalid_argument("action_mul: shape mismatch");
    if (a.map && b.map) {
        std::vector<int> m(b.cols);
        for (int j = 0; j < b.cols; ++j) m[j] = (*a.map)[(*b.map)[j]];
        return Action::basis_map(a.rows, std::move(m));
    }
    return Action::dense(a.to_dense() * b.to_dense());
}

/// A truncated module over the opposite surjection category: one rational
/// vector space per degree 1..N and, for every surjection f: [n] -> [m] with
/// n, m <= N, a matrix V_m -> V_n, contravariantly functorial.
class FSModule {
public:
    using Provider = std::function<Action(const Surjection&)>;

    FSModule() = default;
    FSModule(int max_degree, std::vector<std::vector<std::string>> basis, Provider p)
        : max_degree_(max_degree), basis_(std::move(basis)), provider_(std::move(p)) {
        if (static_cast<int>(basis_.size()) != max_degree_ + 1)
            throw std::invalid_argument("FSModule: basis table size mismatch");
    }

    int max_degree() const { return max_degree_; }
    int dim(int n) const {
        check_degree(n);
        return static_cast<int>(basis_[n].size());
    }
    const std::vector<std::string>& basis(int n) const {
        check_degree(n);
        return basis_[n];
    }

    /// The matrix V_m -> V_n of a surjection f: [n] -> [m].
    Action action(const Surjection& f) const {
        check_degree(f.source);
        check_degree(f.target);
        if (f.source == f.target) {
            bool is_id = true;
            for (int i = 1; i <= f.source; ++i)
                if (f(i) != i) { is_id = false; break; }
            if (is_id) return Action::identity(dim(f.source));
        }
        Action a = provider_(f);
        if (a.rows != dim(f.source) || a.cols != dim(f.target))
            throw std::logic_error("FSModule: provider returned wrong shape for " + f.str());
        return a;
    }

private:
    int max_degree_ = 0;
    std::vector<std::vector<std::string>> basis_;  // [0] unused
    Provider provider_;

    void check_degree(int n) const {
        if (n < 1 || n > max_degree_)
            throw std::invalid_argument("FSModule: degree " + std::to_string(n) +
                                        " out of range (N=" + std::to_string(max_degree_) + ")");
    }
};

// ---------------------------------------------------------------------------
// Free modules
// ---------------------------------------------------------------------------

namespace detail_fs {

struct FreeState {
    int d;
    std::vector<std::vector<std::vector<int>>> bases;        // per degree
    std::vector<std::map<std::vector<int>, int>> index;
};

inline std::shared_ptr<FreeState> make_free_state(int d, int N) {
    auto st = std::make_shared<FreeState>();
    st->d = d;
    st->bases.resize(N + 1);
    st->index.resize(N + 1);
    for (int n = 1; n <= N; ++n) {
        for (const auto& s : enumerate_surjections(n, d)) st->bases[n].push_back(s.values);
        for (size_t i = 0; i < st->bases[n].size(); ++i)
            st->index[n][st->bases[n][i]] = static_cast<int>(i);
    }
    return st;
}

} // namespace detail_fs

/// The free module on one generator in degree d: degree n has basis the
/// surjections [n] -> [d], and f: [n] -> [m] acts by precomposition s -> s o f.
inline FSModule free_module(int d, int N) {
    if (d < 1 || N < d) throw std::invalid_argument("free_module: need 1 <= d <= N");
    auto st = detail_fs::make_free_state(d, N);
    std::vector<std::vector<std::string>> basis(N + 1);
    for (int n = 1; n <= N; ++n)
        for (const auto& v : st->bases[n]) {
            std::string label = "s";
            for (int x : v) label += std::to_string(x);
            basis[n].push_back(label);
        }
    auto provider = [st](const Surjection& f) {
        const auto& from = st->bases[f.target];
        auto& idx = st->index[f.source];
        std::vector<int> m(from.size());
        for (size_t j = 0; j < from.size(); ++j) {
            std::vector<int> composed(f.source);
            for (int i = 1; i <= f.source; ++i) composed[i - 1] = from[j][f(i) - 1];
            auto it = idx.find(composed);
            if (it == idx.end()) throw std::logic_error("free_module: missing composite");
            m[j] = it->second;
        }
        return Action::basis_map(static_cast<int>(st->bases[f.source].size()), std::move(m));
    };
    return FSModule(N, std::move(basis), provider);
}

/// Forgets all degrees above r.
inline FSModule restrict_module(const FSModule& m, int r) {
    if (r < 1 || r > m.max_degree())
        throw std::invalid_argument("restrict_module: bad truncation degree");
    std::vector<std::vector<std::string>> basis(r + 1);
    for (int n = 1; n <= r; ++n) basis[n] = m.basis(n);
    FSModule inner = m;
    return FSModule(r, std::move(basis),
                    [inner](const Surjection& f) { return inner.action(f); });
}

/// Module from an explicit action table.
inline FSModule explicit_module(int N, std::vector<std::vector<std::string>> basis,
                                std::map<Surjection, Action> actions) {
    auto table = std::make_shared<std::map<Surjection, Action>>(std::move(actions));
    std::vector<int> dims(N + 1, 0);
    for (int n = 1; n <= N; ++n) dims[n] = static_cast<int>(basis[n].size());
    auto provider = [table, dims](const Surjection& f) {
        auto it = table->find(f);
        if (it != table->end()) return it->second;
        if (f.source == f.target) return Action::identity(dims[f.source]);
        throw std::invalid_argument("explicit_module: no action stored for " + f.str());
    };
    return FSModule(N, std::move(basis), provider);
}

/// The zero module truncated at N.
inline FSModule zero_module(int N) {
    std::vector<std::vector<std::string>> basis(N + 1);
    return FSModule(N, std::move(basis), [](const Surjection&) {
        return Action::dense(RatMat(0, 0));
    });
}

// ---------------------------------------------------------------------------
// Induction (left Kan extension), computed degreewise as a cokernel
// ---------------------------------------------------------------------------

namespace detail_fs {

/// Sparse forward elimination over Rat. Pivot rows keep their minimal column
/// as leading entry, normalized to 1, so reduction walks left to right.
class SparseElim {
public:
    void reduce(std::map<int, Rat>& v) const {
        for (auto it = v.begin(); it != v.end();) {
            if (it->second.is_zero()) { it = v.erase(it); continue; }
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) { ++it; continue; }
            Rat c = it->second;
            for (const auto& [col, val] : p->second) {
                auto slot = v.find(col);
                if (slot == v.end()) v.emplace(col, Rat(0) - c * val);
                else slot->second -= c * val;
            }
            it = v.erase(v.find(p->first));
        }
    }

    bool insert(std::map<int, Rat> row) {
        reduce(row);
        if (row.empty()) return false;
        Rat lead = row.begin()->second;
        std::vector<std::pair<int, Rat>> stored;
        for (auto& [col, val] : row) stored.emplace_back(col, val / lead);
        pivots_.emplace(stored.front().first, std::move(stored));
        return true;
    }

    bool is_pivot(int col) const { return pivots_.count(col) > 0; }
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::map<int, std::vector<std::pair<int, Rat>>> pivots_;
};

/// Union-find for the case where every relation is a difference of two unit
/// vectors (all actions are basis maps).
class UnitDsu {
public:
    explicit UnitDsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

struct InducedDegree {
    std::vector<Surjection> gens;  // generator blocks, one per f: [n] -> [m]
    std::vector<int> offsets;
    std::map<std::pair<int, std::vector<int>>, int> block_of;  // (target, values) -> gen idx
    int total = 0;

    std::vector<int> quot_coords;
    std::map<int, int> quot_index;
    bool fast = false;
    std::shared_ptr<UnitDsu> dsu;
    std::shared_ptr<SparseElim> elim;

    int gen_index(const Surjection& f) const {
        auto it = block_of.find({f.target, f.values});
        if (it == block_of.end())
            throw std::logic_error("InducedDegree: unknown generator block");
        return it->second;
    }

    std::pair<int, int> decode(int coord) const {
        auto it = std::upper_bound(offsets.begin(), offsets.end(), coord);
        int gi = static_cast<int>(it - offsets.begin()) - 1;
        return {gi, coord - offsets[gi]};
    }

    std::vector<Rat> project(std::map<int, Rat> v) const {
        std::vector<Rat> out(quot_coords.size());
        if (fast) {
            for (auto& [coord, val] : v) out[quot_index.at(dsu->find(coord))] += val;
            return out;
        }
        elim->reduce(v);
        for (auto& [coord, val] : v) out[quot_index.at(coord)] += val;
        return out;
    }
};

} // namespace detail_fs

/// Result of a left Kan extension, exposing enough structure to evaluate the
/// natural map Ind_r Res_r M -> M.
struct Induction {
    FSModule module;
    FSModule original;
    int r = 0;
    std::shared_ptr<std::vector<detail_fs::InducedDegree>> degrees;

    /// Matrix of the natural map Ind_r Res_r M -> M in degree n: the class of
    /// (f, v) maps to matrix(f) v, evaluated in `target` (a module that
    /// agrees with the induction input in degrees <= r but knows degree n).
    RatMat counit_into(const FSModule& target, int n) const {
        const auto& deg = (*degrees)[n];
        RatMat out(target.dim(n), module.dim(n));
        std::map<int, Action> action_cache;
        for (int q = 0; q < module.dim(n); ++q) {
            auto [gi, j] = deg.decode(deg.quot_coords[q]);
            auto it = action_cache.find(gi);
            if (it == action_cache.end())
                it = action_cache.emplace(gi, target.action(deg.gens[gi])).first;
            const Action& af = it->second;
            for (int i = 0; i < af.rows; ++i) out.at(i, q) = af.entry(i, j);
        }
        return out;
    }
};

/// Left adjoint of restriction: extends a module of max degree r to degree
/// n_target. Degree n is the direct sum of one copy of V_m per surjection
/// f: [n] -> [m] with m <= r, modulo the span of
/// (f, matrix(h) v) - (h o f, v) over all h: [m] -> [m']; a surjection sigma
/// acts by sending the class of (f, v) to (f o sigma, v).
inline Induction induce_with_data(const FSModule& m, int n_target) {
    int r = m.max_degree();
    if (n_target < r) throw std::invalid_argument("induce_module: n_target < max_degree");

    // Basis-map modules yield unit-difference relations, handled by
    // union-find; anything else goes through sparse elimination.
    bool all_basis = true;
    for (int mm = 1; mm <= r && all_basis; ++mm)
        for (int mp = 1; mp <= mm && all_basis; ++mp) {
            if (m.dim(mp) == 0) continue;
            for (const auto& h : enumerate_surjections(mm, mp))
                if (!m.action(h).is_basis_map()) { all_basis = false; break; }
        }

    auto degrees = std::make_shared<std::vector<detail_fs::InducedDegree>>(n_target + 1);
    std::vector<std::vector<std::string>> basis(n_target + 1);

    for (int n = 1; n <= n_target; ++n) {
        auto& deg = (*degrees)[n];
        for (int mm = 1; mm <= std::min(n, r); ++mm) {
            if (m.dim(mm) == 0) continue;
            for (const auto& f : enumerate_surjections(n, mm)) {
                deg.block_of[{f.target, f.values}] = static_cast<int>(deg.gens.size());
                deg.offsets.push_back(deg.total);
                deg.gens.push_back(f);
                deg.total += m.dim(mm);
            }
        }
        deg.fast = all_basis;
        if (deg.fast) deg.dsu = std::make_shared<detail_fs::UnitDsu>(deg.total);
        else deg.elim = std::make_shared<detail_fs::SparseElim>();

        for (int mm = 1; mm <= std::min(n, r); ++mm) {
            if (m.dim(mm) == 0) continue;
            for (int mp = 1; mp <= mm; ++mp) {
                if (m.dim(mp) == 0) continue;
                for (const auto& h : enumerate_surjections(mm, mp)) {
                    if (mm == mp && h == Surjection::identity(mm)) continue;
                    Action a = m.action(h);  // V_{mp} -> V_{mm}
                    for (const auto& f : enumerate_surjections(n, mm)) {
                        int off_f = deg.offsets[deg.gen_index(f)];
                        Surjection hf = compose_surjections(f, h);
                        int off_hf = deg.offsets[deg.gen_index(hf)];
                        for (int j = 0; j < m.dim(mp); ++j) {
                            if (deg.fast) {
                                deg.dsu->unite(off_f + (*a.map)[j], off_hf + j);
                            } else {
                                std::map<int, Rat> row;
                                for (int i = 0; i < a.rows; ++i) {
                                    Rat e = a.entry(i, j);
                                    if (!e.is_zero()) row[off_f + i] += e;
                                }
                                row[off_hf + j] -= Rat(1);
                                deg.elim->insert(std::move(row));
                            }
                        }
                    }
                }
            }
        }

        if (deg.fast) {
            for (int c = 0; c < deg.total; ++c)
                if (deg.dsu->find(c) == c) deg.quot_coords.push_back(c);
        } else {
            for (int c = 0; c < deg.total; ++c)
                if (!deg.elim->is_pivot(c)) deg.quot_coords.push_back(c);
        }
        for (size_t i = 0; i < deg.quot_coords.size(); ++i)
            deg.quot_index[deg.quot_coords[i]] = static_cast<int>(i);

        for (int c : deg.quot_coords) {
            auto [gi, j] = deg.decode(c);
            basis[n].push_back(deg.gens[gi].str() + "(x)" +
                               m.basis(deg.gens[gi].target)[j]);
        }
    }

    FSModule inner = m;
    auto provider = [degrees, inner](const Surjection& sigma) {
        const auto& src = (*degrees)[sigma.target];
        const auto& dst = (*degrees)[sigma.source];
        int cols = static_cast<int>(src.quot_coords.size());
        int rows = static_cast<int>(dst.quot_coords.size());
        bool basis_like = true;
        std::vector<int> bmap(cols, -1);
        RatMat dense(rows, cols);
        for (int q = 0; q < cols; ++q) {
            auto [gi, j] = src.decode(src.quot_coords[q]);
            Surjection fs = compose_surjections(sigma, src.gens[gi]);
            int coord = dst.offsets[dst.gen_index(fs)] + j;
            std::vector<Rat> col = dst.project({{coord, Rat(1)}});
            int nonzero = -1;
            for (int i = 0; i < rows; ++i) {
                dense.at(i, q) = col[i];
                if (!col[i].is_zero()) {
                    if (nonzero >= 0 || col[i] != Rat(1)) basis_like = false;
                    else nonzero = i;
                }
            }
            if (nonzero < 0) basis_like = false;
            bmap[q] = nonzero;
        }
        if (basis_like) return Action::basis_map(rows, std::move(bmap));
        return Action::dense(std::move(dense));
    };

    Induction out;
    out.module = FSModule(n_target, std::move(basis), provider);
    out.original = m;
    out.r = r;
    out.degrees = degrees;
    return out;
}

inline FSModule induce_module(const FSModule& m, int n_target) {
    return induce_with_data(m, n_target).module;
}

/// Exhaustive contravariant functoriality check up to degree `up_to`:
/// matrix(g o f) == matrix(f) * matrix(g) for composable pairs, and
/// identities act as identities.
inline bool functoriality_check(const FSModule& m, int up_to) {
    up_to = std::min(up_to, m.max_degree());
    for (int n = 1; n <= up_to; ++n) {
        if (m.action(Surjection::identity(n)).trace() != Rat(m.dim(n))) return false;
        for (int mid = 1; mid <= n; ++mid)
            for (int k = 1; k <= mid; ++k)
                for (const auto& f : enumerate_surjections(n, mid))
                    for (const auto& g : enumerate_surjections(mid, k)) {
                        Action left = m.action(compose_surjections(f, g));
                        Action right = action_mul(m.action(f), m.action(g));
                        if (!(left == right)) return false;
                    }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json module_to_json(const FSModule& m) {
    nlohmann::ordered_json j;
    j["max_degree"] = m.max_degree();
    j["spaces"] = nlohmann::ordered_json::array();
    for (int n = 1; n <= m.max_degree(); ++n) {
        nlohmann::ordered_json s;
        s["degree"] = n;
        s["dim"] = m.dim(n);
        s["basis"] = m.basis(n);
        j["spaces"].push_back(s);
    }
    j["actions"] = nlohmann::ordered_json::array();
    for (int n = 1; n <= m.max_degree(); ++n)
        for (int mm = 1; mm <= n; ++mm)
            for (const auto& f : enumerate_surjections(n, mm)) {
                if (m.dim(n) == 0 && m.dim(mm) == 0) continue;
                nlohmann::ordered_json a;
                a["source"] = n;
                a["target"] = mm;
                a["values"] = f.values;
                Action act = m.action(f);
                auto rows = nlohmann::ordered_json::array();
                for (int rr = 0; rr < act.rows; ++rr) {
                    auto row = nlohmann::ordered_json::array();
                    for (int cc = 0; cc < act.cols; ++cc)
                        row.push_back(act.entry(rr, cc).str());
                    rows.push_back(row);
                }
                a["matrix"] = rows;
                j["actions"].push_back(a);
            }
    return j;
}

inline FSModule module_from_json(const nlohmann::json& j) {
    int N = j.at("max_degree").get<int>();
    std::vector<std::vector<std::string>> basis(N + 1);
    for (const auto& s : j.at("spaces")) {
        int n = s.at("degree").get<int>();
        if (n < 1 || n > N) throw std::invalid_argument("module_from_json: bad degree");
        basis[n] = s.at("basis").get<std::vector<std::string>>();
    }
    std::map<Surjection, Action> actions;
    for (const auto& a : j.at("actions")) {
        int n = a.at("source").get<int>();
        int mm = a.at("target").get<int>();
        Surjection f(n, mm, a.at("values").get<std::vector<int>>());
        const auto& rows = a.at("matrix");
        RatMat mat(static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size()));
        if (mat.rows() != static_cast<int>(basis[n].size()) ||
            mat.cols() != static_cast<int>(basis[mm].size()))
            throw std::invalid_argument("module_from_json: matrix shape mismatch for " + f.str());
        for (int rr = 0; rr < mat.rows(); ++rr)
            for (int cc = 0; cc < mat.cols(); ++cc)
                mat.at(rr, cc) = Rat::parse(rows[rr][cc].get<std::string>());
        actions.emplace(f, Action::dense(std::move(mat)));
    }
    return explicit_module(N, std::move(basis), std::move(actions));
}

} // namespace strata
