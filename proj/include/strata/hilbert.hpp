#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/matrix.hpp"
#include "strata/poly.hpp"
#include "strata/surjection.hpp"

namespace strata {

/// Rational generating function in canonical form: a polynomial numerator
/// over a product of factors (1 - j t)^{d_j}. The denominator is kept
/// factored, never expanded, so the root-set structure is an invariant of
/// the representation rather than a numerical fact.
struct RationalGF {
    Poly numerator;
    std::map<int, int> denominator_exponents;  // j -> d_j, j >= 1, d_j >= 1

    /// Largest base appearing in the denominator (0 for polynomials).
    int C() const {
        int c = 0;
        for (auto& [j, d] : denominator_exponents)
            if (d > 0) c = std::max(c, j);
        return c;
    }

    int denominator_degree() const {
        int deg = 0;
        for (auto& [j, d] : denominator_exponents) deg += d;
        return deg;
    }

    Poly denominator_expanded() const {
        Poly den = Poly::constant(Rat(1));
        for (auto& [j, d] : denominator_exponents)
            for (int k = 0; k < d; ++k)
                den = den * Poly({Rat(1), Rat(-j)});
        return den;
    }

    /// Cancels every factor (1 - j t) dividing the numerator, so that the
    /// stored fraction is reduced.
    void reduce() {
        for (auto it = denominator_exponents.begin(); it != denominator_exponents.end();) {
            int j = it->first;
            Poly factor({Rat(1), Rat(-j)});
            while (it->second > 0) {
                auto [q, r] = numerator.divmod(factor);
                if (!r.is_zero()) break;
                numerator = q;
                --it->second;
            }
            if (it->second == 0) it = denominator_exponents.erase(it);
            else ++it;
        }
    }

    std::string str() const {
        std::string s = numerator.str();
        if (!denominator_exponents.empty()) {
            s = "(" + s + ")";
            for (auto& [j, d] : denominator_exponents) {
                s += " / (1-" + std::to_string(j) + "t)";
                if (d > 1) s += "^" + std::to_string(d);
            }
        }
        return s;
    }
};

/// Hilbert series of the free module on a degree-d generator:
/// sum_n #surjections([n],[d]) t^n = d! t^d / prod_{j=1}^d (1 - j t).
inline RationalGF free_hilbert_series(int d) {
    if (d < 1) throw std::invalid_argument("free_hilbert_series: d >= 1 required");
    RationalGF gf;
    gf.numerator = Poly::monomial(Rat(factorial(d)), d);
    for (int j = 1; j <= d; ++j) gf.denominator_exponents[j] = 1;
    return gf;
}

/// Exact Taylor coefficient of t^n via the linear recurrence induced by the
/// expanded denominator.
inline Rat coefficient(const RationalGF& gf, int n) {
    if (n < 0) throw std::invalid_argument("coefficient: n >= 0 required");
    Poly den = gf.denominator_expanded();  // constant term 1
    std::vector<Rat> a(n + 1);
    for (int i = 0; i <= n; ++i) {
        Rat v = gf.numerator.coeff(i);
        for (int k = 1; k <= std::min(i, den.degree()); ++k)
            v -= den.coeff(k) * a[i - k];
        a[i] = v;
    }
    return a[n];
}

/// Partial-fraction decomposition into polynomial-times-exponential form:
/// coefficients of t^n equal sum_j f_j(n) j^n for all n past the polynomial
/// part. Returns pairs (j, f_j) with deg f_j <= d_j - 1, plus the polynomial
/// correction as decomposition.polynomial_part.
struct PolyExpDecomposition {
    std::vector<std::pair<int, Poly>> terms;  // (base j, polynomial in n)
    Poly polynomial_part;                     // finitely many low-order terms

    /// Evaluates sum_j f_j(n) j^n (+ polynomial part coefficient at n).
    Rat eval(long long n) const {
        Rat acc = polynomial_part.coeff(static_cast<int>(n));
        for (auto& [j, f] : terms) {
            Rat pw(1);
            for (long long t = 0; t < n; ++t) pw *= Rat(j);
            acc += f.eval(Rat(n)) * pw;
        }
        return acc;
    }
};

inline PolyExpDecomposition poly_exp_decomposition(const RationalGF& gf) {
    // numerator = Q * D + sum_{j,k} c_{jk} * D / (1 - j t)^k, solved exactly.
    Poly den = gf.denominator_expanded();
    int den_deg = den.degree();
    int q_deg = std::max(-1, gf.numerator.degree() - den_deg);

    std::vector<std::pair<int, int>> unknown_cjk;  // (j, k)
    for (auto& [j, d] : gf.denominator_exponents)
        for (int k = 1; k <= d; ++k) unknown_cjk.push_back({j, k});

    int unknowns = (q_deg + 1) + static_cast<int>(unknown_cjk.size());
    int eq_deg = q_deg + den_deg;  // highest coefficient degree to match
    RatMat A(eq_deg + 1, unknowns);
    std::vector<Rat> b(eq_deg + 1);
    for (int i = 0; i <= eq_deg; ++i) b[i] = gf.numerator.coeff(i);

    for (int qi = 0; qi <= q_deg; ++qi)
        for (int i = 0; i <= eq_deg; ++i)
            if (i - qi >= 0) A.at(i, qi) = den.coeff(i - qi);

    for (size_t u = 0; u < unknown_cjk.size(); ++u) {
        auto [j, k] = unknown_cjk[u];
        // D / (1 - j t)^k as a polynomial
        Poly red = den;
        Poly factor({Rat(1), Rat(-j)});
        for (int t = 0; t < k; ++t) red = red.divide_exact(factor);
        for (int i = 0; i <= eq_deg; ++i) A.at(i, q_deg + 1 + static_cast<int>(u)) = red.coeff(i);
    }

    auto sol = solve_linear(A, b);
    if (!sol) throw std::logic_error("poly_exp_decomposition: inconsistent system");

    PolyExpDecomposition out;
    {
        std::vector<Rat> qc(sol->begin(), sol->begin() + (q_deg + 1));
        out.polynomial_part = Poly(std::move(qc));
    }
    // f_j(n) = sum_k c_{jk} C(n + k - 1, k - 1), assembled as a polynomial in n
    std::map<int, Poly> fj;
    for (size_t u = 0; u < unknown_cjk.size(); ++u) {
        auto [j, k] = unknown_cjk[u];
        Rat c = (*sol)[q_deg + 1 + u];
        if (c.is_zero()) continue;
        Poly binom = Poly::constant(Rat(1));
        for (int i = 1; i <= k - 1; ++i)
            binom = binom * Poly({Rat(i), Rat(1)}) * Rat(1, i);  // (n + i) / i
        fj[j] = fj.count(j) ? fj[j] + binom * c : binom * c;
    }
    for (auto& [j, f] : fj)
        if (!f.is_zero()) out.terms.push_back({j, f});
    return out;
}

// ---------------------------------------------------------------------------
// Bound polynomials
// ---------------------------------------------------------------------------

/// Coefficients of the linear threshold f(i,e,a) = r i + s e + t a + u.
struct FCoeffs {
    long long r = 16, s = 8, t = 13, u = -7;

    long long eval(long long i, long long e, long long a) const {
        return r * i + s * e + t * a + u;
    }
};

/// The alternative threshold quoted alongside the main one (11i + 7e + 9a - 5).
inline FCoeffs alt_threshold_coeffs() { return FCoeffs{11, 7, 9, -5}; }

/// The trichotomy threshold 13a + 16i + 8e - 7.
inline long long f_bound(long long i, long long e, long long a) {
    return FCoeffs{}.eval(i, e, a);
}

enum class BoundForm { Composed, Expanded };

/// The leg-count bound polynomial, in both of its closed forms. Composed:
/// (i+1) g + (i+1) g f(i, g, (i+1) g). Expanded: the closed quadratic
/// 8 g^2 i^2 + 29 g^2 i + 16 g i^2 + 21 g^2 + 10 g i - 6 g. The two forms
/// disagree for i >= 1; bounds_report flags the discrepancy.
inline long long p_bound(long long g, long long i, BoundForm form,
                         const FCoeffs& coeffs = FCoeffs{}) {
    if (form == BoundForm::Composed)
        return (i + 1) * g + (i + 1) * g * coeffs.eval(i, g, (i + 1) * g);
    return 8 * g * g * i * i + 29 * g * g * i + 16 * g * i * i + 21 * g * g +
           10 * g * i - 6 * g;
}

struct BoundComparison {
    long long g = 0, i = 0;
    long long composed = 0;
    long long expanded = 0;
    bool discrepancy = false;
};

inline BoundComparison bounds_report(long long g, long long i) {
    BoundComparison r;
    r.g = g;
    r.i = i;
    r.composed = p_bound(g, i, BoundForm::Composed);
    r.expanded = p_bound(g, i, BoundForm::Expanded);
    r.discrepancy = (r.composed != r.expanded);
    return r;
}

} // namespace strata
