#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minorb/cartan.hpp"
#include "minorb/lie_type.hpp"
#include "minorb/linalg.hpp"
#include "minorb/rational.hpp"

namespace minorb {

/// A root in simple-root coordinates. Positive roots have all coords >= 0.
struct Root {
    IntVec coords;
    int height = 0;

    friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    /// (height, lexicographic coords) — the canonical listing order.
    friend bool operator<(const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coords < b.coords;
    }
};

inline Root make_root(IntVec coords) {
    Root r;
    r.height = 0;
    for (auto c : coords) r.height += static_cast<int>(c);
    r.coords = std::move(coords);
    return r;
}

/// Fully enumerated root system of a simple type. Immutable after
/// construction: share freely across threads.
struct RootSystem {
    LieType type{Family::A, 1};
    CartanMatrix cartan;
    BilinearForm form;  // normalized: (theta, theta) = 2
    std::vector<Root> positives;  // sorted by (height, lex)
    Root theta;
    RatVec rho;  // half the sum of positives, simple-root coordinates

    [[nodiscard]] int rank() const { return cartan.n; }

    [[nodiscard]] bool is_root(const IntVec& v) const { return all_roots_.count(v) != 0; }
    [[nodiscard]] bool is_positive_root(const IntVec& v) const {
        return positive_set_.count(v) != 0;
    }

    [[nodiscard]] Root simple_root(int i) const {
        IntVec v(static_cast<std::size_t>(cartan.n), 0);
        v[static_cast<std::size_t>(i)] = 1;
        return make_root(std::move(v));
    }

    /// All 2*|positives| roots, as a set of coordinate vectors.
    [[nodiscard]] const std::set<IntVec>& root_set() const { return all_roots_; }

    std::set<IntVec> positive_set_;  // populated by generate_roots
    std::set<IntVec> all_roots_;
};

namespace detail {

/// <beta, alpha_i^vee> = sum_j beta_j a[i][j]; pure Cartan integer arithmetic.
inline int coroot_pairing(const CartanMatrix& c, const IntVec& beta, int i) {
    long long acc = 0;
    for (int j = 0; j < c.n; ++j) {
        acc += beta[static_cast<std::size_t>(j)] * c.at(i, j);
    }
    return static_cast<int>(acc);
}

}  // namespace detail

/// Enumerates the positive roots of a finite-type Cartan matrix by
/// height-layer induction on root strings: beta + alpha_i is a root iff
/// p - <beta, alpha_i^vee> > 0, where p counts how far the string through
/// beta extends downward (beta - alpha_i, beta - 2 alpha_i, ... stopping at
/// a non-root or at 0). Layers below the current height are complete when
/// consulted, so the membership tests are exact.
inline std::vector<Root> enumerate_positive_roots(const CartanMatrix& c) {
    const int n = c.n;
    const std::size_t un = static_cast<std::size_t>(n);
    std::set<IntVec> found;
    std::vector<IntVec> layer;
    layer.reserve(un);
    for (std::size_t i = 0; i < un; ++i) {
        IntVec v(un, 0);
        v[i] = 1;
        found.insert(v);
        layer.push_back(std::move(v));
    }

    std::vector<Root> out;
    const int height_bound = 3 * n + 32;  // any finite type tops out well below this
    int height = 1;
    while (!layer.empty()) {
        for (const auto& v : layer) out.push_back(make_root(v));
        if (++height > height_bound) {
            throw std::logic_error("root generation exceeded height bound; input is not finite type");
        }
        std::vector<IntVec> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < n; ++i) {
                const std::size_t ui = static_cast<std::size_t>(i);
                IntVec gamma = beta;
                ++gamma[ui];
                if (found.count(gamma)) continue;
                int p = 0;
                IntVec down = beta;
                for (;;) {
                    --down[ui];
                    if (is_zero(down) || !found.count(down)) break;
                    ++p;
                }
                if (p - detail::coroot_pairing(c, beta, i) > 0) {
                    found.insert(gamma);
                    next.push_back(std::move(gamma));
                }
            }
        }
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Builds the complete RootSystem for a simple type: Cartan matrix,
/// positive roots, highest root, Weyl vector, and the bilinear form
/// normalized so that (theta, theta) = 2.
inline RootSystem generate_roots(const LieType& t) {
    RootSystem rs;
    rs.type = t;
    rs.cartan = cartan_matrix(t);
    rs.positives = enumerate_positive_roots(rs.cartan);

    // theta: the strictly maximal height must be attained once.
    const int top = rs.positives.back().height;
    std::size_t at_top = 0;
    for (const auto& r : rs.positives) {
        if (r.height == top) ++at_top;
    }
    if (at_top != 1) {
        throw std::logic_error("highest root is not unique; root system is not irreducible");
    }
    rs.theta = rs.positives.back();

    const std::size_t un = static_cast<std::size_t>(rs.cartan.n);
    rs.rho.assign(un, Rational(0));
    for (const auto& r : rs.positives) {
        for (std::size_t j = 0; j < un; ++j) {
            rs.rho[j] += Rational(r.coords[j]);
        }
    }
    for (std::size_t j = 0; j < un; ++j) rs.rho[j] *= Rational(1, 2);

    rs.form = normalize(unnormalized_form(rs.cartan), rs.theta.coords);

    for (const auto& r : rs.positives) {
        rs.positive_set_.insert(r.coords);
        rs.all_roots_.insert(r.coords);
        rs.all_roots_.insert(negate(r.coords));
    }
    return rs;
}

/// (total, positive) root counts; total is always twice the positive count.
inline std::pair<int, int> root_count(const RootSystem& rs) {
    const int p = static_cast<int>(rs.positives.size());
    return {2 * p, p};
}

}  // namespace minorb
