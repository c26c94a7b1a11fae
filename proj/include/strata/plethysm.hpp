#pragma once

#include <map>
#include <stdexcept>

#include "strata/characters.hpp"
#include "strata/partition.hpp"
#include "strata/rational.hpp"

namespace strata {

/// Symmetric functions in the power-sum basis, truncated by total degree:
/// a finite rational combination of monomials p_nu indexed by partitions.
using PowerPoly = std::map<Partition, Rat>;

inline PowerPoly pp_scale(const PowerPoly& a, const Rat& c) {
    PowerPoly out;
    if (c.is_zero()) return out;
    for (auto& [k, v] : a) out[k] = v * c;
    return out;
}

inline void pp_add_in(PowerPoly& a, const PowerPoly& b) {
    for (auto& [k, v] : b) {
        auto it = a.find(k);
        if (it == a.end()) a.emplace(k, v);
        else {
            it->second += v;
            if (it->second.is_zero()) a.erase(it);
        }
    }
}

/// Product with truncation: monomials of degree > max_degree are dropped.
/// Sound in the power-sum basis because plethysm and products only move
/// degrees upward.
inline PowerPoly pp_mul(const PowerPoly& a, const PowerPoly& b, int max_degree) {
    PowerPoly out;
    for (auto& [ka, va] : a)
        for (auto& [kb, vb] : b) {
            if (ka.size() + kb.size() > max_degree) continue;
            std::vector<int> parts = ka.parts;
            parts.insert(parts.end(), kb.parts.begin(), kb.parts.end());
            std::sort(parts.rbegin(), parts.rend());
            Partition key(std::move(parts));
            auto it = out.find(key);
            Rat add = va * vb;
            if (it == out.end()) out.emplace(key, add);
            else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

/// p_k plethysm: substitutes p_i -> p_{ik} in every monomial.
inline PowerPoly pp_plethysm_pk(const PowerPoly& a, int k, int max_degree) {
    PowerPoly out;
    for (auto& [key, v] : a) {
        if (key.size() * k > max_degree) continue;
        std::vector<int> parts;
        for (int p : key.parts) parts.push_back(p * k);
        std::sort(parts.rbegin(), parts.rend());
        pp_add_in(out, PowerPoly{{Partition(std::move(parts)), v}});
    }
    return out;
}

/// Complete homogeneous h_j = sum over nu of p_nu / z_nu.
inline PowerPoly h_in_powersums(int j) {
    PowerPoly out;
    for (const auto& nu : partitions_of(j)) out[nu] = Rat(1, z_of(nu));
    return out;
}

/// h_1 + h_2 + ... truncated at total degree max_degree.
inline PowerPoly h_sum_truncated(int max_degree) {
    PowerPoly out;
    for (int j = 1; j <= max_degree; ++j) pp_add_in(out, h_in_powersums(j));
    return out;
}

/// Degree-m part.
inline PowerPoly pp_homogeneous(const PowerPoly& a, int m) {
    PowerPoly out;
    for (auto& [k, v] : a)
        if (k.size() == m) out[k] = v;
    return out;
}

/// The degree-m term of the plethysm s_lambda[h_1 + h_2 + ...], expressed as
/// Schur multiplicities (a multiplicity map over partitions of m). Computed
/// in the power-sum basis with exact rationals; p_k[p_j] = p_{kj} makes the
/// degree truncation sound.
inline std::map<Partition, long long> plethysm_degree_term(const Partition& lambda, int m) {
    int k = lambda.size();
    if (k < 1 || m < k)
        throw std::invalid_argument("plethysm_degree_term: need 1 <= |lambda| <= m");
    PowerPoly H = h_sum_truncated(m);

    // cache p_j[H] for the part sizes appearing in cycle types of S_k
    std::map<int, PowerPoly> pj_of_H;
    for (int j = 1; j <= k; ++j) pj_of_H[j] = pp_plethysm_pk(H, j, m);

    PowerPoly total;
    for (const auto& nu : partitions_of(k)) {
        PowerPoly prod{{Partition(), Rat(1)}};
        for (int part : nu.parts) prod = pp_mul(prod, pj_of_H[part], m);
        pp_add_in(total, pp_scale(prod, Rat(irreducible_character(lambda, nu), z_of(nu))));
    }
    PowerPoly deg_m = pp_homogeneous(total, m);

    // <p_rho, s_mu> = chi^mu(rho)
    std::map<Partition, long long> out;
    for (const auto& mu : partitions_of(m)) {
        Rat mult(0);
        for (auto& [rho, c] : deg_m) mult += c * Rat(irreducible_character(mu, rho));
        if (!mult.is_integer() || mult < Rat(0))
            throw std::logic_error("plethysm_degree_term: non-integral multiplicity " +
                                   mult.str() + " at " + mu.str());
        if (mult.as_integer() > 0) out[mu] = mult.as_integer();
    }
    return out;
}

} // namespace strata
