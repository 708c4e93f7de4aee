#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorb/rational.hpp"

namespace minorb {

/// Integer coordinate vector over the simple roots.
using IntVec = std::vector<std::int64_t>;
/// Exact rational vector.
using RatVec = std::vector<Rational>;

inline RatVec to_rational(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (auto c : v) r.emplace_back(c);
    return r;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec negate(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool is_zero(const IntVec& a) {
    for (auto c : a) {
        if (c != 0) return false;
    }
    return true;
}

/// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    [[nodiscard]] const Rational& at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

inline bool is_symmetric(const RatMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (m.at(i, j) != m.at(j, i)) return false;
        }
    }
    return true;
}

/// Sylvester test: every leading principal minor strictly positive.
/// Pivots of division-based elimination multiply to the leading minors,
/// so a non-positive pivot at any step decides the answer exactly.
inline bool positive_definite(RatMatrix m) {
    if (m.rows() != m.cols()) return false;
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Rational pivot = m.at(k, k);
        if (!(pivot > Rational(0))) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            const Rational f = m.at(i, k) / pivot;
            for (std::size_t j = k; j < n; ++j) {
                m.at(i, j) -= f * m.at(k, j);
            }
        }
    }
    return true;
}

/// Exact solve of A x = b for square nonsingular A (Gauss-Jordan with
/// nonzero pivot search). Throws std::domain_error when singular.
inline RatVec solve(RatMatrix a, RatVec b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw std::invalid_argument("solve: dimension mismatch");
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a.at(p, k).is_zero()) ++p;
        if (p == n) throw std::domain_error("solve: singular matrix");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            std::swap(b[k], b[p]);
        }
        const Rational pivot = a.at(k, k);
        for (std::size_t j = 0; j < n; ++j) a.at(k, j) /= pivot;
        b[k] /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k).is_zero()) continue;
            const Rational f = a.at(i, k);
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            b[i] -= f * b[k];
        }
    }
    return b;
}

}  // namespace minorb
