#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/surjection.hpp"

namespace strata {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { check(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { check(); }

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < length() ? parts[i] : 0; }

    /// The padded partition (p0 + n, p1, ..., pk); stays a partition for n >= 0
    /// as long as the original is one (or is empty, giving (n)).
    Partition padded(int n) const {
        if (n == 0) return *this;
        std::vector<int> p = parts;
        if (p.empty()) p.push_back(n);
        else p[0] += n;
        return Partition(std::move(p));
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + "]";
    }

    /// Parses the str() format "[3,1,1]" (also accepts a bare "3,1,1").
    static Partition parse(const std::string& in) {
        std::string s = in;
        if (!s.empty() && s.front() == '[') {
            if (s.back() != ']') throw std::invalid_argument("Partition: bad " + in);
            s = s.substr(1, s.size() - 2);
        }
        std::vector<int> p;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            p.push_back(std::stoi(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        return Partition(std::move(p));
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts == b.parts;
    }
    friend bool operator!=(const Partition& a, const Partition& b) {
        return !(a == b);
    }
    /// Ordering: by size, then reverse-lexicographic on parts ((m) first).
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return b.parts < a.parts;
    }

private:
    void check() const {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i && parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts must be decreasing");
        }
    }
};

/// All partitions of m, largest-first order ((m), (m-1,1), ..., (1^m)).
inline std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

/// Centralizer order z_mu = prod k^{m_k} m_k!; class size is m!/z_mu.
inline long long z_of(const Partition& mu) {
    long long z = 1;
    int run = 0, prev = -1;
    for (int p : mu.parts) {
        if (p == prev) ++run;
        else { prev = p; run = 1; }
        z *= static_cast<long long>(p) * run;
    }
    return z;
}

inline long long conjugacy_class_size(const Partition& mu) {
    return factorial(mu.size()) / z_of(mu);
}

/// A permutation of [m] with cycle type mu, as a bijective Surjection.
inline Surjection class_representative(const Partition& mu) {
    int m = mu.size();
    std::vector<int> v(m);
    int base = 0;
    for (int p : mu.parts) {
        for (int i = 0; i < p; ++i) v[base + i] = base + (i + 1) % p + 1;
        base += p;
    }
    return Surjection(m, m, std::move(v));
}

/// Cycle type of a bijection.
inline Partition cycle_type(const Surjection& sigma) {
    if (!sigma.is_bijection())
        throw std::invalid_argument("cycle_type: not a bijection");
    int n = sigma.source;
    std::vector<bool> seen(n + 1, false);
    std::vector<int> cycles;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = true; j = sigma(j); ++len; }
        cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    return Partition(std::move(cycles));
}

} // namespace strata
