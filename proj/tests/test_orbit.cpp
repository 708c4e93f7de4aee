#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <minorb/battery.hpp>
#include <minorb/orbit.hpp>
#include <minorb/orthonormal.hpp>

using namespace minorb;

namespace {

/// Independent dual-Coxeter oracle: expand theta over the simple roots and
/// use (rho, alpha_i^vee) = 1, so (rho, theta) = sum_i t_i (alpha_i,
/// alpha_i) / 2 — no Weyl-vector summation involved.
int dual_coxeter_via_kac_labels(const RootSystem& rs) {
    Rational acc(0);
    for (std::size_t i = 0; i < rs.theta.coords.size(); ++i) {
        acc += Rational(rs.theta.coords[i]) * rs.form.b.at(i, i) / Rational(2);
    }
    REQUIRE(acc.is_integer());
    return static_cast<int>(acc.num()) + 1;
}

/// Special roots recomputed on the oracle-generated root set only.
int num_special_via_oracle(const LieType& t) {
    const std::set<IntVec> roots = to_simple_coords(orthonormal_roots(t));
    // Highest root = unique maximal height.
    IntVec theta;
    long long best = -1;
    for (const auto& v : roots) {
        long long h = 0;
        for (auto c : v) h += c;
        if (h > best) {
            best = h;
            theta = v;
        }
    }
    int count = 0;
    for (const auto& v : roots) {
        bool positive = true;
        for (auto c : v) {
            if (c < 0) positive = false;
        }
        if (!positive) continue;
        const IntVec diff = sub(theta, v);
        if (!is_zero(diff) && roots.count(diff)) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("special root sets of the defining examples") {
    const RootSystem a1 = generate_roots(LieType{Family::A, 1});
    CHECK(special_roots(a1).size() == 0);  // theta - alpha1 = 0 is not a root

    const RootSystem a2 = generate_roots(LieType{Family::A, 2});
    const SpecialRootSet s2 = special_roots(a2);
    CHECK(s2.coord_set == std::set<IntVec>{{1, 0}, {0, 1}});

    const RootSystem g2 = generate_roots(LieType{Family::G, 2});
    const SpecialRootSet sg = special_roots(g2);
    CHECK(sg.size() == 4);
    CHECK(sg.coord_set == std::set<IntVec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("dual Coxeter numbers") {
    CHECK(dual_coxeter(generate_roots(LieType{Family::A, 1})) == 2);
    CHECK(dual_coxeter(generate_roots(LieType{Family::A, 2})) == 3);
    const RootSystem e8 = generate_roots(LieType{Family::E, 8});
    CHECK(dual_coxeter(e8) == 30);
    CHECK(dual_coxeter_via_kac_labels(e8) == 30);
}

TEST_CASE("(rho, theta) is a nonnegative integer on the whole battery") {
    for (const auto& t : default_battery()) {
        CAPTURE(t.name());
        const RootSystem rs = generate_roots(t);
        const Rational rt = rs.form.inner(rs.rho, rs.theta.coords);
        CHECK(rt.is_integer());
        CHECK(rt > Rational(0));
        CHECK(dual_coxeter(rs) == dual_coxeter_via_kac_labels(rs));
    }
}

TEST_CASE("orbit dimension by orthogonality count") {
    CHECK(dim_min_orbit_lemma1(generate_roots(LieType{Family::A, 1})) == 2);
    CHECK(dim_min_orbit_lemma1(generate_roots(LieType{Family::A, 2})) == 4);
    CHECK(dim_min_orbit_lemma1(generate_roots(LieType{Family::G, 2})) == 6);
}

TEST_CASE("orbit dimension closed form") {
    CHECK(dim_min_orbit_theorem(generate_roots(LieType{Family::A, 1})) == 2);
    CHECK(dim_min_orbit_theorem(generate_roots(LieType{Family::E, 8})) == 58);
    CHECK(dim_min_orbit_theorem(generate_roots(LieType{Family::F, 4})) == 16);
}

TEST_CASE("special count matches 2(h_dual - 2)") {
    CHECK(check_lemma3(generate_roots(LieType{Family::A, 1})));   // 0 = 2(2-2)
    CHECK(check_lemma3(generate_roots(LieType{Family::A, 2})));   // 2 = 2(3-2)
    CHECK(check_lemma3(generate_roots(LieType{Family::G, 2})));   // 4 = 2(4-2)
}

TEST_CASE("three routes to r_theta(rho) coincide") {
    const RootSystem a1 = generate_roots(LieType{Family::A, 1});
    CHECK(check_eq1_eq2(a1));
    CHECK(reflect(a1, a1.theta, a1.rho) == RatVec{Rational(-1, 2)});

    const RootSystem a2 = generate_roots(LieType{Family::A, 2});
    CHECK(check_eq1_eq2(a2));
    CHECK(reflect(a2, a2.theta, a2.rho) == RatVec{Rational(-1), Rational(-1)});

    CHECK(check_eq1_eq2(generate_roots(LieType{Family::G, 2})));
}

TEST_CASE("verification reports of the pinned examples") {
    const VerificationReport a1 = verify(LieType{Family::A, 1});
    CHECK(a1.num_roots == 2);
    CHECK(a1.num_positive == 1);
    CHECK(a1.h_dual == 2);
    CHECK(a1.num_special == 0);
    CHECK(a1.dim_lemma1 == 2);
    CHECK(a1.dim_theorem == 2);
    CHECK(a1.reflection_length_theta == 1);
    CHECK(a1.all_passed());

    const VerificationReport g2 = verify(LieType{Family::G, 2});
    CHECK(g2.h_dual == 4);
    CHECK(g2.num_special == 4);
    CHECK(g2.dim_lemma1 == 6);
    CHECK(g2.dim_theorem == 6);
    CHECK(g2.reflection_length_theta == 5);
    CHECK(g2.all_passed());

    const VerificationReport d4 = verify(LieType{Family::D, 4});
    CHECK(d4.h_dual == 6);
    CHECK(d4.num_special == 8);
    CHECK(d4.dim_lemma1 == 10);
    CHECK(d4.dim_theorem == 10);
    CHECK(d4.reflection_length_theta == 9);
    CHECK(d4.all_passed());
    // D4 special count recomputed purely from the orthonormal oracle.
    CHECK(num_special_via_oracle(LieType{Family::D, 4}) == 8);
}

TEST_CASE("pairing alpha -> theta - alpha is a fixed-point-free involution on S") {
    for (const auto& t : default_battery()) {
        CAPTURE(t.name());
        const RootSystem rs = generate_roots(t);
        const SpecialRootSet s = special_roots(rs);
        CHECK(s.size() % 2 == 0);
        for (const auto& alpha : s.members) {
            const IntVec partner = sub(rs.theta.coords, alpha.coords);
            CHECK(s.contains(partner));
            CHECK(partner != alpha.coords);
        }
    }
}

TEST_CASE("theta is never special") {
    for (const auto& t : default_battery()) {
        const RootSystem rs = generate_roots(t);
        CHECK_FALSE(special_roots(rs).contains(rs.theta.coords));
    }
}
