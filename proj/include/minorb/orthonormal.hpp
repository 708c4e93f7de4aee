#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "minorb/lie_type.hpp"
#include "minorb/linalg.hpp"
#include "minorb/rational.hpp"

namespace minorb {

/// A root system realized in orthonormal coordinates, built without touching
/// the Cartan-matrix path: classical families come from their closed-form
/// descriptions, exceptional ones from reflection closure of the standard
/// simple-root vectors. Serves as the cross-validation oracle for
/// generate_roots.
struct OrthonormalSystem {
    int ambient_dim = 0;
    std::vector<RatVec> simples;  // simple roots, same node numbering as cartan_matrix
    std::vector<RatVec> roots;    // the full root set
};

namespace detail {

inline Rational dot(const RatVec& x, const RatVec& y) {
    Rational acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

inline RatVec unit(int dim, int i, Rational scale = Rational(1)) {
    RatVec v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(i)] = scale;
    return v;
}

inline RatVec axpy(const RatVec& x, const Rational& c, const RatVec& y) {
    RatVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + c * y[i];
    return r;
}

/// Closure of the simple roots under their own reflections. Every root of a
/// finite system is a Weyl image of a simple root, so this reproduces the
/// whole set.
inline std::vector<RatVec> reflection_closure(const std::vector<RatVec>& simples) {
    std::set<std::vector<Rational>> seen;
    std::vector<RatVec> work(simples);
    for (const auto& s : simples) seen.insert(s);
    std::vector<RatVec> out(simples);
    while (!work.empty()) {
        const RatVec v = work.back();
        work.pop_back();
        for (const auto& s : simples) {
            const Rational c = Rational(-2) * dot(v, s) / dot(s, s);
            RatVec w = axpy(v, c, s);
            if (seen.insert(w).second) {
                out.push_back(w);
                work.push_back(std::move(w));
            }
        }
    }
    return out;
}

inline std::vector<RatVec> classical_simples(Family f, int n) {
    std::vector<RatVec> s;
    const int dim = (f == Family::A) ? n + 1 : n;
    for (int i = 0; i + 1 < ((f == Family::A) ? n + 1 : n); ++i) {
        RatVec v = unit(dim, i);
        v[static_cast<std::size_t>(i + 1)] = Rational(-1);
        s.push_back(std::move(v));
    }
    switch (f) {
        case Family::A:
            break;  // the path e_i - e_{i+1} is already complete
        case Family::B:
            s.push_back(unit(dim, n - 1));
            break;
        case Family::C:
            s.push_back(unit(dim, n - 1, Rational(2)));
            break;
        case Family::D: {
            RatVec v = unit(dim, n - 2);
            v[static_cast<std::size_t>(n - 1)] = Rational(1);
            s.push_back(std::move(v));
            break;
        }
        default:
            throw std::logic_error("classical_simples: not a classical family");
    }
    return s;
}

inline std::vector<RatVec> exceptional_simples(const LieType& t) {
    auto frac = [](int num, int den) { return Rational(num, den); };
    if (t.family == Family::G) {
        // Node 1 long, node 2 short (see docs/conventions.md).
        std::vector<RatVec> s(2, RatVec(3, Rational(0)));
        s[0] = {frac(-2, 1), frac(1, 1), frac(1, 1)};
        s[1] = {frac(1, 1), frac(-1, 1), frac(0, 1)};
        return s;
    }
    if (t.family == Family::F) {
        std::vector<RatVec> s;
        s.push_back({frac(0, 1), frac(1, 1), frac(-1, 1), frac(0, 1)});
        s.push_back({frac(0, 1), frac(0, 1), frac(1, 1), frac(-1, 1)});
        s.push_back({frac(0, 1), frac(0, 1), frac(0, 1), frac(1, 1)});
        s.push_back({frac(1, 2), frac(-1, 2), frac(-1, 2), frac(-1, 2)});
        return s;
    }
    // E6/E7/E8: the first rank nodes of the E8 list.
    std::vector<RatVec> e8;
    e8.push_back({frac(1, 2), frac(-1, 2), frac(-1, 2), frac(-1, 2), frac(-1, 2), frac(-1, 2),
                  frac(-1, 2), frac(1, 2)});
    e8.push_back({frac(1, 1), frac(1, 1), frac(0, 1), frac(0, 1), frac(0, 1), frac(0, 1),
                  frac(0, 1), frac(0, 1)});
    for (int i = 3; i <= 8; ++i) {
        RatVec v(8, Rational(0));
        v[static_cast<std::size_t>(i - 2)] = Rational(1);
        v[static_cast<std::size_t>(i - 3)] = Rational(-1);
        e8.push_back(std::move(v));
    }
    e8.resize(static_cast<std::size_t>(t.rank));
    return e8;
}

}  // namespace detail

inline OrthonormalSystem orthonormal_roots(const LieType& t) {
    OrthonormalSystem sys;
    const int n = t.rank;
    switch (t.family) {
        case Family::A: {
            sys.ambient_dim = n + 1;
            sys.simples = detail::classical_simples(Family::A, n);
            for (int i = 0; i <= n; ++i) {
                for (int j = 0; j <= n; ++j) {
                    if (i == j) continue;
                    RatVec v = detail::unit(n + 1, i);
                    v[static_cast<std::size_t>(j)] = Rational(-1);
                    sys.roots.push_back(std::move(v));
                }
            }
            return sys;
        }
        case Family::B:
        case Family::C:
        case Family::D: {
            sys.ambient_dim = n;
            sys.simples = detail::classical_simples(t.family, n);
            for (int i = 0; i < n; ++i) {
                for (int sign : {1, -1}) {
                    if (t.family == Family::B) {
                        sys.roots.push_back(detail::unit(n, i, Rational(sign)));
                    } else if (t.family == Family::C) {
                        sys.roots.push_back(detail::unit(n, i, Rational(2 * sign)));
                    }
                }
            }
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    for (int si : {1, -1}) {
                        for (int sj : {1, -1}) {
                            RatVec v = detail::unit(n, i, Rational(si));
                            v[static_cast<std::size_t>(j)] = Rational(sj);
                            sys.roots.push_back(std::move(v));
                        }
                    }
                }
            }
            return sys;
        }
        case Family::E:
        case Family::F:
        case Family::G: {
            sys.simples = detail::exceptional_simples(t);
            sys.ambient_dim = static_cast<int>(sys.simples.front().size());
            sys.roots = detail::reflection_closure(sys.simples);
            return sys;
        }
    }
    throw std::logic_error("unhandled family");
}

/// Rewrites every oracle root over the simple-root basis (exact Gram solve).
/// All coordinates must come out integral; anything else means the tables
/// are corrupt.
inline std::set<IntVec> to_simple_coords(const OrthonormalSystem& sys) {
    const std::size_t n = sys.simples.size();
    RatMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            gram.at(i, j) = detail::dot(sys.simples[i], sys.simples[j]);
        }
    }
    std::set<IntVec> out;
    for (const auto& v : sys.roots) {
        RatVec rhs(n);
        for (std::size_t j = 0; j < n; ++j) rhs[j] = detail::dot(v, sys.simples[j]);
        const RatVec c = solve(gram, rhs);
        // Reconstruct to confirm v really lies in the simple-root lattice.
        RatVec rebuilt(static_cast<std::size_t>(sys.ambient_dim), Rational(0));
        IntVec coords(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (!c[j].is_integer()) {
                throw std::logic_error("oracle root has non-integer simple-root coordinates");
            }
            coords[j] = c[j].num();
            rebuilt = detail::axpy(rebuilt, c[j], sys.simples[j]);
        }
        if (rebuilt != v) {
            throw std::logic_error("oracle root does not lie in the simple-root span");
        }
        out.insert(std::move(coords));
    }
    return out;
}

}  // namespace minorb
