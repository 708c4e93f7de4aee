#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorb/lie_type.hpp"
#include "minorb/linalg.hpp"
#include "minorb/rational.hpp"

namespace minorb {

/// Integer Cartan matrix under the convention
///
///     a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
///
/// i.e. row i is paired against the coroot of alpha_i. Node numbering is
/// Bourbaki's for all families; see docs/conventions.md (in particular the
/// G2 orientation: node 1 long, node 2 short).
struct CartanMatrix {
    int n = 0;
    std::vector<std::vector<int>> a;

    [[nodiscard]] int at(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

namespace detail {

inline CartanMatrix path_matrix(int n) {
    CartanMatrix c;
    c.n = n;
    c.a.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) c.a[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) {
        c.a[i][i + 1] = -1;
        c.a[i + 1][i] = -1;
    }
    return c;
}

}  // namespace detail

/// Builds the Cartan matrix of a simple type.
inline CartanMatrix cartan_matrix(const LieType& t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
            return detail::path_matrix(n);
        case Family::B: {
            // Last node short: its row carries the -2.
            CartanMatrix c = detail::path_matrix(n);
            c.a[n - 1][n - 2] = -2;
            return c;
        }
        case Family::C: {
            // Last node long.
            CartanMatrix c = detail::path_matrix(n);
            c.a[n - 2][n - 1] = -2;
            return c;
        }
        case Family::D: {
            CartanMatrix c = detail::path_matrix(n);
            // Node n hangs off node n-2 instead of extending the path.
            c.a[n - 2][n - 1] = 0;
            c.a[n - 1][n - 2] = 0;
            c.a[n - 3][n - 1] = -1;
            c.a[n - 1][n - 3] = -1;
            return c;
        }
        case Family::E: {
            // Chain 1-3-4-5-...-n with node 2 attached to node 4.
            CartanMatrix c;
            c.n = n;
            c.a.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
            for (int i = 0; i < n; ++i) c.a[i][i] = 2;
            auto link = [&c](int i, int j) {
                c.a[i][j] = -1;
                c.a[j][i] = -1;
            };
            link(0, 2);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            link(1, 3);
            return c;
        }
        case Family::F: {
            CartanMatrix c = detail::path_matrix(4);
            c.a[2][1] = -2;  // nodes 1,2 long; 3,4 short
            return c;
        }
        case Family::G: {
            CartanMatrix c;
            c.n = 2;
            c.a = {{2, -1}, {-3, 2}};  // node 1 long, node 2 short
            return c;
        }
    }
    throw std::logic_error("unhandled family");
}

/// Symmetrizer d: positive rationals with d_i a[i][j] = d_j a[j][i],
/// normalized to d = 1 on the first node of each diagram component.
/// Throws std::invalid_argument when no such d exists.
inline RatVec symmetrizer(const CartanMatrix& c) {
    const int n = c.n;
    RatVec d(static_cast<std::size_t>(n), Rational(0));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        d[start] = Rational(1);
        seen[start] = true;
        std::vector<int> stack = {start};
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (c.at(i, j) == 0 || i == j) continue;
                if (c.at(j, i) == 0) {
                    throw std::invalid_argument("Cartan matrix is not symmetrizable");
                }
                const Rational dj = d[i] * Rational(c.at(i, j), c.at(j, i));
                if (seen[j]) continue;
                d[j] = dj;
                seen[j] = true;
                stack.push_back(j);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (d[i] * Rational(c.at(i, j)) != d[j] * Rational(c.at(j, i))) {
                throw std::invalid_argument("Cartan matrix is not symmetrizable");
            }
        }
    }
    return d;
}

/// Checks every CartanMatrix invariant; throws std::invalid_argument with a
/// description of the first violation.
inline void validate_cartan(const CartanMatrix& c) {
    const int n = c.n;
    if (n <= 0 || c.a.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("Cartan matrix has no rows");
    }
    for (int i = 0; i < n; ++i) {
        if (c.a[i].size() != static_cast<std::size_t>(n)) {
            throw std::invalid_argument("Cartan matrix is not square");
        }
        if (c.at(i, i) != 2) {
            throw std::invalid_argument("Cartan diagonal entry != 2 at node " + std::to_string(i + 1));
        }
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c.at(i, j) > 0) {
                throw std::invalid_argument("positive off-diagonal Cartan entry at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
            if ((c.at(i, j) == 0) != (c.at(j, i) == 0)) {
                throw std::invalid_argument("asymmetric zero pattern at (" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + ")");
            }
        }
    }
    const RatVec d = symmetrizer(c);
    RatMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b.at(i, j) = d[i] * Rational(c.at(i, j));
    }
    if (!positive_definite(b)) {
        throw std::invalid_argument("symmetrized Cartan matrix is not positive definite (not finite type)");
    }
}

/// Symmetric positive-definite matrix of simple-root inner products,
/// B[i][j] = (alpha_i, alpha_j).
struct BilinearForm {
    RatMatrix b;

    [[nodiscard]] std::size_t rank() const { return b.rows(); }

    /// x^T B y, exact. Throws std::invalid_argument on length mismatch.
    [[nodiscard]] Rational inner(const RatVec& x, const RatVec& y) const {
        const std::size_t n = rank();
        if (x.size() != n || y.size() != n) {
            throw std::invalid_argument("inner: vector length does not match form rank");
        }
        Rational acc(0);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            Rational row(0);
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                row += b.at(i, j) * y[j];
            }
            acc += x[i] * row;
        }
        return acc;
    }

    [[nodiscard]] Rational inner(const IntVec& x, const IntVec& y) const {
        return inner(to_rational(x), to_rational(y));
    }
    [[nodiscard]] Rational inner(const IntVec& x, const RatVec& y) const {
        return inner(to_rational(x), y);
    }
    [[nodiscard]] Rational inner(const RatVec& x, const IntVec& y) const {
        return inner(x, to_rational(y));
    }

    friend bool operator==(const BilinearForm& x, const BilinearForm& y) { return x.b == y.b; }
};

/// Phase one of the form construction: B[i][j] = d_i a[i][j] for the
/// symmetrizer d. Positive definite for finite type; the global scale is
/// still arbitrary until normalize() fixes it against the highest root.
inline BilinearForm unnormalized_form(const CartanMatrix& c) {
    validate_cartan(c);
    const RatVec d = symmetrizer(c);
    const std::size_t n = static_cast<std::size_t>(c.n);
    BilinearForm f;
    f.b = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            f.b.at(i, j) = d[i] * Rational(c.at(static_cast<int>(i), static_cast<int>(j)));
        }
    }
    return f;
}

/// Phase two: rescale so that (theta, theta) = 2 exactly.
inline BilinearForm normalize(const BilinearForm& f, const IntVec& theta) {
    const Rational tt = f.inner(theta, theta);
    if (!(tt > Rational(0))) {
        throw std::invalid_argument("normalize: (theta, theta) must be positive");
    }
    const Rational scale = Rational(2) / tt;
    BilinearForm g;
    const std::size_t n = f.rank();
    g.b = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g.b.at(i, j) = scale * f.b.at(i, j);
    }
    return g;
}

}  // namespace minorb
