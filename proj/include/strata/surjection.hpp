#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

/// A surjection [n] -> [m] of standard finite sets, stored as the value
/// vector (1-based values). Morphism of the finite-set surjection category.
struct Surjection {
    int source = 0;  // n
    int target = 0;  // m
    std::vector<int> values;  // values[i-1] = image of i, in 1..m

    Surjection() = default;
    Surjection(int n, int m, std::vector<int> vals)
        : source(n), target(m), values(std::move(vals)) {
        if (!well_formed())
            throw std::invalid_argument("Surjection: not a surjection " + str());
    }

    static Surjection identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return Surjection(n, n, std::move(v));
    }

    bool well_formed() const {
        if (source < 1 || target < 1 || target > source) return false;
        if (static_cast<int>(values.size()) != source) return false;
        std::vector<bool> hit(target, false);
        for (int v : values) {
            if (v < 1 || v > target) return false;
            hit[v - 1] = true;
        }
        for (bool h : hit)
            if (!h) return false;
        return true;
    }

    int operator()(int i) const { return values[i - 1]; }

    bool is_bijection() const { return source == target; }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < source; ++i) {
            if (i) s += ",";
            s += std::to_string(values[i]);
        }
        return s + "]:" + std::to_string(source) + "->" + std::to_string(target);
    }

    friend bool operator==(const Surjection& a, const Surjection& b) {
        return a.source == b.source && a.target == b.target && a.values == b.values;
    }
    friend bool operator<(const Surjection& a, const Surjection& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.target != b.target) return a.target < b.target;
        return a.values < b.values;
    }
};

/// Pointwise composite g(f(.)): first f: [n]->[m], then g: [m]->[k].
inline Surjection compose_surjections(const Surjection& f, const Surjection& g) {
    if (f.target != g.source)
        throw std::invalid_argument("compose_surjections: size mismatch " +
                                    f.str() + " then " + g.str());
    std::vector<int> v(f.source);
    for (int i = 1; i <= f.source; ++i) v[i - 1] = g(f(i));
    return Surjection(f.source, g.target, std::move(v));
}

/// All surjections [n] -> [m] in lexicographic order of value vectors.
inline std::vector<Surjection> enumerate_surjections(int n, int m) {
    std::vector<Surjection> out;
    if (n < 1 || m < 1 || m > n) return out;
    std::vector<int> v(n, 1);
    std::vector<int> count(m + 1, 0);
    auto rec = [&](auto&& self, int pos, int missing) -> void {
        if (n - pos < missing) return;  // cannot cover the remaining values
        if (pos == n) {
            out.emplace_back(n, m, v);
            return;
        }
        for (int val = 1; val <= m; ++val) {
            v[pos] = val;
            bool fresh = (count[val] == 0);
            ++count[val];
            self(self, pos + 1, missing - (fresh ? 1 : 0));
            --count[val];
        }
    };
    rec(rec, 0, m);
    return out;
}

/// Stirling number of the second kind S(n,m) by recurrence.
inline long long stirling2(int n, int m) {
    if (n < 0 || m < 0) return 0;
    if (n == 0 && m == 0) return 1;
    if (n == 0 || m == 0 || m > n) return 0;
    std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(m + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, m); ++j)
            s[i][j] = s[i - 1][j - 1] + static_cast<long long>(j) * s[i - 1][j];
    return s[n][m];
}

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Number of surjections [n] -> [m], m! * S(n,m).
inline long long count_surjections(int n, int m) {
    if (n < 1 || m < 1 || m > n) return 0;
    return factorial(m) * stirling2(n, m);
}

/// Independent inclusion-exclusion count, sum_j (-1)^j C(m,j) (m-j)^n.
inline long long count_surjections_incl_excl(int n, int m) {
    if (n < 1 || m < 1 || m > n) return 0;
    long long total = 0;
    for (int j = 0; j <= m; ++j) {
        long long binom = 1;
        for (int i = 0; i < j; ++i) binom = binom * (m - i) / (i + 1);
        long long pw = 1;
        for (int i = 0; i < n; ++i) pw *= (m - j);
        total += (j % 2 == 0 ? 1 : -1) * binom * pw;
    }
    return total;
}

} // namespace strata
