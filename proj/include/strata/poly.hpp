#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

/// Dense univariate polynomial over Rat, coefficient i = coefficient of t^i.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rat v) { return Poly({v}); }
    static Poly monomial(Rat v, int deg) {
        std::vector<Rat> c(deg + 1);
        c[deg] = v;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[i];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const Rat& s) const {
        std::vector<Rat> r(c_);
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact division; throws if the remainder is nonzero.
    Poly divide_exact(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
        return q;
    }

    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("Poly: division by zero poly");
        std::vector<Rat> rem(c_);
        std::vector<Rat> quot;
        int dd = d.degree();
        Rat lead = d.c_[dd];
        while (static_cast<int>(rem.size()) - 1 >= dd) {
            int rd = static_cast<int>(rem.size()) - 1;
            if (rem[rd].is_zero()) { rem.pop_back(); continue; }
            Rat f = rem[rd] / lead;
            int shift = rd - dd;
            if (static_cast<int>(quot.size()) < shift + 1) quot.resize(shift + 1);
            quot[shift] = f;
            for (int i = 0; i <= dd; ++i) rem[shift + i] -= f * d.c_[i];
            rem.pop_back();
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    /// "3t^2 - 1/2t + 4" style rendering in the given variable.
    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            Rat a = c_[i];
            if (!out.empty()) {
                out += (a < Rat(0)) ? " - " : " + ";
                if (a < Rat(0)) a = -a;
            } else if (a < Rat(0)) {
                out += "-";
                a = -a;
            }
            bool unit = (a == Rat(1));
            if (i == 0 || !unit) out += a.str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<Rat> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Binomial coefficient as an exact rational (n may be any integer).
inline Rat binomial_rat(long long n, int k) {
    if (k < 0) return Rat(0);
    Rat r(1);
    for (int i = 0; i < k; ++i) r = r * Rat(n - i) / Rat(i + 1);
    return r;
}

} // namespace strata
