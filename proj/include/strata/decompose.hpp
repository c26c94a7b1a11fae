#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "strata/characters.hpp"
#include "strata/fs_module.hpp"
#include "strata/partition.hpp"

namespace strata {

/// Character of the symmetric-group action on degree m of a module: the
/// trace of the bijection action, one value per conjugacy class.
inline ClassFunction module_character(const FSModule& m, int degree) {
    if (degree < 1 || degree > m.max_degree())
        throw std::invalid_argument("module_character: degree out of range");
    ClassFunction cf;
    cf.degree = degree;
    for (const auto& mu : partitions_of(degree))
        cf.values.push_back(m.action(class_representative(mu)).trace());
    return cf;
}

/// Multiplicity of one irreducible in the degree-m part.
inline long long multiplicity_of(const FSModule& m, int degree, const Partition& lambda) {
    ClassFunction cm = module_character(m, degree);
    Rat mult = cm.inner(irreducible_class_function(lambda));
    if (!mult.is_integer() || mult < Rat(0))
        throw std::logic_error("multiplicity_of: non-integral or negative multiplicity " +
                               mult.str() + " for " + lambda.str());
    return mult.as_integer();
}

/// Full decomposition of the degree-m symmetric-group representation into
/// irreducibles. Checks integrality and that dimensions add up.
inline std::map<Partition, long long> decompose_degree(const FSModule& m, int degree) {
    ClassFunction cm = module_character(m, degree);
    std::map<Partition, long long> out;
    long long dim_total = 0;
    for (const auto& lambda : partitions_of(degree)) {
        Rat mult = cm.inner(irreducible_class_function(lambda));
        if (!mult.is_integer() || mult < Rat(0))
            throw std::logic_error("decompose_degree: non-integral or negative multiplicity " +
                                   mult.str() + " for " + lambda.str());
        long long mu = mult.as_integer();
        if (mu > 0) out[lambda] = mu;
        dim_total += mu * irreducible_dimension(lambda);
    }
    if (dim_total != m.dim(degree))
        throw std::logic_error("decompose_degree: dimensions do not add up");
    return out;
}

/// Multiplicity profile of padded partitions: the sequence of multiplicities
/// of lambda+n (first part grown by n) in degree |lambda| + n, for every
/// degree up to the module truncation. For the empty partition the sequence
/// starts at degree 1.
inline std::vector<long long> multiplicity_profile(const FSModule& m,
                                                   const Partition& lambda) {
    std::vector<long long> profile;
    int k = lambda.size();
    for (int n = (k == 0 ? 1 : 0); k + n <= m.max_degree(); ++n) {
        Partition padded = lambda.padded(n);
        if (padded.part(0) < padded.part(1)) { profile.push_back(0); continue; }
        profile.push_back(multiplicity_of(m, k + n, padded));
    }
    return profile;
}

/// Minimal degree of a polynomial interpolating the tail values[start..],
/// decided by vanishing finite differences; -1 for the zero tail.
inline int poly_fit_min_degree(const std::vector<long long>& values, size_t start = 0) {
    std::vector<long long> v(values.begin() + std::min(start, values.size()), values.end());
    if (v.empty()) return -1;
    int degree = -1;
    for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d) {
        // compute d-th differences; if nonzero somewhere, degree is d
        std::vector<long long> diff = v;
        for (int round = 0; round < d; ++round)
            for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.resize(v.size() - d);
        bool nonzero = false;
        for (long long x : diff)
            if (x != 0) nonzero = true;
        if (nonzero) { degree = d; break; }
    }
    return degree;
}

/// Symmetric-group decomposition of the degree-m part of the projective
/// module attached to lambda (|lambda| = k): the lambda-isotypic piece of the
/// surjection space under post-composition, with the degree-m bijections
/// acting by precomposition. Computed by exact character traces.
inline std::map<Partition, long long> projective_decompose(const Partition& lambda, int m) {
    int k = lambda.size();
    if (k < 1 || m < k)
        throw std::invalid_argument("projective_decompose: need 1 <= |lambda| <= m");
    auto surjs = enumerate_surjections(m, k);
    auto classes = partitions_of(m);

    // chi_P(mu) = (1/k!) sum over s of chi^lambda(tau(s, sigma_mu)) where
    // tau o (s o sigma) = s when the two fiber partitions agree.
    ClassFunction chi_p;
    chi_p.degree = m;
    for (const auto& mu : classes) {
        Surjection sigma = class_representative(mu);
        long long total = 0;
        for (const auto& s : surjs) {
            std::vector<int> tau(k + 1, 0);
            bool ok = true;
            for (int i = 1; i <= m && ok; ++i) {
                int x = s(sigma(i));  // (s o sigma)(i)
                int y = s(i);
                if (tau[x] == 0) tau[x] = y;
                else if (tau[x] != y) ok = false;
            }
            if (!ok) continue;
            std::vector<bool> hit(k + 1, false);
            for (int K = 1; K <= k && ok; ++K) {
                if (tau[K] < 1 || hit[tau[K]]) ok = false;
                else hit[tau[K]] = true;
            }
            if (!ok) continue;
            total += irreducible_character(lambda, cycle_type(Surjection(
                         k, k, std::vector<int>(tau.begin() + 1, tau.end()))));
        }
        chi_p.values.push_back(Rat(total, factorial(k)));
    }

    std::map<Partition, long long> out;
    for (const auto& nu : classes) {
        Rat mult = chi_p.inner(irreducible_class_function(nu));
        if (!mult.is_integer() || mult < Rat(0))
            throw std::logic_error("projective_decompose: non-integral multiplicity " +
                                   mult.str() + " at " + nu.str());
        if (mult.as_integer() > 0) out[nu] = mult.as_integer();
    }
    return out;
}

} // namespace strata
