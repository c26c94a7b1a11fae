#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

/// Dense matrix over Rat, row-major.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    RatMat operator*(const RatMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("RatMat: shape mismatch");
        RatMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Rat& b = o.at(k, j);
                    if (!b.is_zero()) r.at(i, j) += a * b;
                }
            }
        return r;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("RatMat: vector size mismatch");
        std::vector<Rat> r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    Rat trace() const {
        if (rows_ != cols_) throw std::invalid_argument("RatMat: trace of non-square");
        Rat t(0);
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

    int rank() const {
        RatMat m(*this);
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (!m.at(r, col).is_zero()) { pivot = r; break; }
            if (pivot < 0) continue;
            if (pivot != rank)
                for (int c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
            Rat inv = Rat(1) / m.at(rank, col);
            for (int c = col; c < cols_; ++c) m.at(rank, c) *= inv;
            for (int r = rank + 1; r < rows_; ++r) {
                Rat f = m.at(r, col);
                if (f.is_zero()) continue;
                for (int c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(rank, c);
            }
            ++rank;
        }
        return rank;
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

private:
    int rows_, cols_;
    std::vector<Rat> data_;
};

/// Solves A x = b exactly by Gauss-Jordan elimination. Returns one solution,
/// or nullopt if the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_linear(RatMat a, std::vector<Rat> b) {
    if (a.rows() != static_cast<int>(b.size()))
        throw std::invalid_argument("solve_linear: shape mismatch");
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(rank, c));
        std::swap(b[pivot], b[rank]);
        Rat inv = Rat(1) / a.at(rank, col);
        for (int c = 0; c < a.cols(); ++c) a.at(rank, c) *= inv;
        b[rank] *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == rank) continue;
            Rat f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < a.cols(); ++c) a.at(r, c) -= f * a.at(rank, c);
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < a.rows(); ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<Rat> x(a.cols(), Rat(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

} // namespace strata
