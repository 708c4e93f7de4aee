#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "minorb/lie_type.hpp"
#include "minorb/linalg.hpp"
#include "minorb/rational.hpp"
#include "minorb/root_system.hpp"
#include "minorb/weyl.hpp"

namespace minorb {

/// The special roots: positive roots alpha with theta - alpha again a root.
struct SpecialRootSet {
    std::vector<Root> members;  // in (height, lex) order
    std::set<IntVec> coord_set;

    [[nodiscard]] int size() const { return static_cast<int>(members.size()); }
    [[nodiscard]] bool contains(const IntVec& v) const { return coord_set.count(v) != 0; }
};

inline SpecialRootSet special_roots(const RootSystem& rs) {
    SpecialRootSet s;
    for (const auto& alpha : rs.positives) {
        const IntVec diff = sub(rs.theta.coords, alpha.coords);
        if (!is_zero(diff) && rs.is_root(diff)) {
            s.members.push_back(alpha);
            s.coord_set.insert(alpha.coords);
        }
    }
    return s;
}

/// Dual Coxeter number, (rho, theta) + 1 under the (theta, theta) = 2
/// normalization. The pairing must come out a nonnegative integer; anything
/// else means the normalization is broken.
inline int dual_coxeter(const RootSystem& rs) {
    const Rational rt = rs.form.inner(rs.rho, rs.theta.coords);
    if (!rt.is_integer() || rt.is_negative()) {
        throw std::logic_error("(rho, theta) = " + rt.str() +
                               " is not a nonnegative integer; form normalization is broken");
    }
    return static_cast<int>(rt.num()) + 1;
}

/// Orbit dimension, counted: one plus the number of positive roots not
/// orthogonal to theta.
inline int dim_min_orbit_lemma1(const RootSystem& rs) {
    int nonorthogonal = 0;
    const RatVec theta = to_rational(rs.theta.coords);
    for (const auto& alpha : rs.positives) {
        if (!rs.form.inner(alpha.coords, theta).is_zero()) ++nonorthogonal;
    }
    return 1 + nonorthogonal;
}

/// Orbit dimension, closed form: 2 h_dual - 2.
inline int dim_min_orbit_theorem(const RootSystem& rs) {
    return 2 * dual_coxeter(rs) - 2;
}

/// #S == 2 (h_dual - 2)?
inline bool check_lemma3(const RootSystem& rs) {
    return special_roots(rs).size() == 2 * (dual_coxeter(rs) - 2);
}

/// Computes r_theta(rho) three ways and demands exact vector agreement:
/// the reflection formula, rho - (h_dual - 1) theta, and
/// rho - (#S + 2)/2 theta.
inline bool check_eq1_eq2(const RootSystem& rs) {
    const RatVec direct = reflect(rs, rs.theta, rs.rho);
    const Rational h(dual_coxeter(rs));
    const Rational half_count = Rational(special_roots(rs).size() + 2, 2);
    RatVec via_h(rs.rho.size());
    RatVec via_count(rs.rho.size());
    for (std::size_t i = 0; i < rs.rho.size(); ++i) {
        const Rational t(rs.theta.coords[i]);
        via_h[i] = rs.rho[i] - (h - Rational(1)) * t;
        via_count[i] = rs.rho[i] - half_count * t;
    }
    return direct == via_h && direct == via_count;
}

struct ReportChecks {
    bool lemma2_partition = false;
    bool lemma3_count = false;
    bool eq1_eq2_vector_equality = false;
    bool theorem_dims_equal = false;
    bool corollary_length = false;
    bool special_pairing = false;
    bool nonorthogonal_set_equality = false;

    [[nodiscard]] bool all() const {
        return lemma2_partition && lemma3_count && eq1_eq2_vector_equality &&
               theorem_dims_equal && corollary_length && special_pairing &&
               nonorthogonal_set_equality;
    }

    friend bool operator==(const ReportChecks& a, const ReportChecks& b) {
        return a.lemma2_partition == b.lemma2_partition && a.lemma3_count == b.lemma3_count &&
               a.eq1_eq2_vector_equality == b.eq1_eq2_vector_equality &&
               a.theorem_dims_equal == b.theorem_dims_equal &&
               a.corollary_length == b.corollary_length &&
               a.special_pairing == b.special_pairing &&
               a.nonorthogonal_set_equality == b.nonorthogonal_set_equality;
    }
};

/// Every computed quantity plus one flag per verified identity. A false
/// flag is a failure, not a tolerated state.
struct VerificationReport {
    LieType type{Family::A, 1};
    int num_roots = 0;
    int num_positive = 0;
    int h_dual = 0;
    int num_special = 0;
    int dim_lemma1 = 0;
    int dim_theorem = 0;
    int reflection_length_theta = 0;
    ReportChecks checks;

    [[nodiscard]] bool all_passed() const { return checks.all(); }

    friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
        return a.type == b.type && a.num_roots == b.num_roots &&
               a.num_positive == b.num_positive && a.h_dual == b.h_dual &&
               a.num_special == b.num_special && a.dim_lemma1 == b.dim_lemma1 &&
               a.dim_theorem == b.dim_theorem &&
               a.reflection_length_theta == b.reflection_length_theta && a.checks == b.checks;
    }
};

/// Runs the whole pipeline for one type and evaluates every identity.
inline VerificationReport verify(const RootSystem& rs) {
    VerificationReport rep;
    rep.type = rs.type;
    rep.num_positive = static_cast<int>(rs.positives.size());
    rep.num_roots = 2 * rep.num_positive;

    const SpecialRootSet s = special_roots(rs);
    rep.h_dual = dual_coxeter(rs);
    rep.num_special = s.size();
    rep.dim_lemma1 = dim_min_orbit_lemma1(rs);
    rep.dim_theorem = dim_min_orbit_theorem(rs);
    rep.reflection_length_theta = reflection_length(rs, rs.theta);

    // Partition agrees with the theta - alpha definition of S.
    const PositivePartition parts = classify_positives(rs);
    bool partition_ok = parts.theta_part.size() == 1 &&
                        parts.theta_part.front() == rs.theta &&
                        static_cast<int>(parts.special_part.size()) == s.size();
    if (partition_ok) {
        for (const auto& alpha : parts.special_part) {
            if (!s.contains(alpha.coords)) {
                partition_ok = false;
                break;
            }
        }
    }
    rep.checks.lemma2_partition = partition_ok;

    rep.checks.lemma3_count = rep.num_special == 2 * (rep.h_dual - 2);
    rep.checks.eq1_eq2_vector_equality = check_eq1_eq2(rs);
    rep.checks.theorem_dims_equal = rep.dim_lemma1 == rep.dim_theorem;
    rep.checks.corollary_length = rep.reflection_length_theta == 2 * rep.h_dual - 3;

    // alpha in S iff theta - alpha in S, with no fixed point.
    bool pairing_ok = true;
    for (const auto& alpha : s.members) {
        const IntVec partner = sub(rs.theta.coords, alpha.coords);
        if (!s.contains(partner) || partner == alpha.coords) {
            pairing_ok = false;
            break;
        }
    }
    rep.checks.special_pairing = pairing_ok && rep.num_special % 2 == 0;

    // S + {theta} is exactly the set of positives not orthogonal to theta.
    std::set<IntVec> s_with_theta = s.coord_set;
    s_with_theta.insert(rs.theta.coords);
    std::set<IntVec> nonorthogonal;
    const RatVec theta = to_rational(rs.theta.coords);
    for (const auto& alpha : rs.positives) {
        if (!rs.form.inner(alpha.coords, theta).is_zero()) nonorthogonal.insert(alpha.coords);
    }
    rep.checks.nonorthogonal_set_equality = s_with_theta == nonorthogonal;

    return rep;
}

inline VerificationReport verify(const LieType& t) { return verify(generate_roots(t)); }

}  // namespace minorb
