#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "strata/partition.hpp"
#include "strata/rational.hpp"

namespace strata {

namespace detail_char {

/// Beta-set of a partition: distinct first-column hook lengths
/// lambda_i + (L - 1 - i) for a fixed number of rows L.
inline std::vector<int> beta_set(const Partition& lambda, int rows) {
    std::vector<int> beta;
    for (int i = 0; i < rows; ++i)
        beta.push_back(lambda.part(i) + (rows - 1 - i));
    return beta;  // strictly decreasing
}

inline Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int rows = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < rows; ++i) {
        int p = beta[i] - (rows - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

inline long long mn_rec(const Partition& lambda, const std::vector<int>& mu, size_t idx) {
    if (idx == mu.size()) return lambda.size() == 0 ? 1 : 0;
    int t = mu[idx];
    int rows = lambda.length();
    if (rows == 0) return 0;
    auto beta = beta_set(lambda, rows);
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i] - t;
        if (b < 0) continue;
        bool clash = false;
        int jumped = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == b) { clash = true; break; }
            if (beta[j] < beta[i] && beta[j] > b) ++jumped;
        }
        if (clash) continue;
        auto nb = beta;
        nb[i] = b;
        long long sign = (jumped % 2 == 0) ? 1 : -1;
        total += sign * mn_rec(partition_from_beta(nb), mu, idx + 1);
    }
    return total;
}

} // namespace detail_char

/// Irreducible symmetric-group character chi^lambda(mu) by rim-hook
/// (Murnaghan-Nakayama) recursion. Both partitions must have the same size.
inline long long irreducible_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("irreducible_character: size mismatch");
    return detail_char::mn_rec(lambda, mu.parts, 0);
}

/// Full character table of S_m: table[i][j] = chi^{lambda_i}(mu_j) with both
/// indices running over partitions_of(m) in its standard order. Cached.
inline const std::vector<std::vector<long long>>& character_table(int m) {
    static std::map<int, std::vector<std::vector<long long>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto parts = partitions_of(m);
    std::vector<std::vector<long long>> table(parts.size(),
                                              std::vector<long long>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < parts.size(); ++j)
            table[i][j] = irreducible_character(parts[i], parts[j]);
    return cache.emplace(m, std::move(table)).first->second;
}

/// chi^lambda at the identity class.
inline long long irreducible_dimension(const Partition& lambda) {
    int m = lambda.size();
    if (m == 0) return 1;
    std::vector<int> ones(m, 1);
    return irreducible_character(lambda, Partition(std::move(ones)));
}

/// Rational class function on S_m, stored by conjugacy class in the
/// partitions_of(m) order.
struct ClassFunction {
    int degree = 0;
    std::vector<Rat> values;

    Rat inner(const ClassFunction& other) const {
        if (degree != other.degree)
            throw std::invalid_argument("ClassFunction: degree mismatch");
        auto parts = partitions_of(degree);
        Rat acc(0);
        for (size_t j = 0; j < parts.size(); ++j)
            acc += values[j] * other.values[j] / Rat(z_of(parts[j]));
        return acc;
    }
};

inline ClassFunction irreducible_class_function(const Partition& lambda) {
    int m = lambda.size();
    auto parts = partitions_of(m);
    ClassFunction cf;
    cf.degree = m;
    for (const auto& mu : parts) cf.values.push_back(Rat(irreducible_character(lambda, mu)));
    return cf;
}

} // namespace strata
