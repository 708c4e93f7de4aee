#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <minorb/battery.hpp>
#include <minorb/root_system.hpp>
#include <minorb/weyl.hpp>

using namespace minorb;

TEST_CASE("reflection negates its axis") {
    const RootSystem a2 = generate_roots(LieType{Family::A, 2});
    CHECK(reflect_root(a2, a2.theta, a2.theta) == negate(a2.theta.coords));
}

TEST_CASE("r_theta sends alpha1 of A2 to alpha1 - theta") {
    const RootSystem a2 = generate_roots(LieType{Family::A, 2});
    const Root alpha1 = a2.simple_root(0);
    // alpha1 - theta = -alpha2.
    CHECK(reflect_root(a2, a2.theta, alpha1) == IntVec{0, -1});
}

TEST_CASE("roots orthogonal to the axis are fixed") {
    const RootSystem b2 = generate_roots(LieType{Family::B, 2});
    const RatVec theta = to_rational(b2.theta.coords);
    int fixed = 0;
    for (const auto& alpha : b2.positives) {
        if (b2.form.inner(alpha.coords, theta).is_zero()) {
            CHECK(reflect_root(b2, b2.theta, alpha) == alpha.coords);
            ++fixed;
        }
    }
    CHECK(fixed == 1);  // B2: exactly alpha1 = e1 - e2
}

TEST_CASE("reflect rejects a non-root axis") {
    const RootSystem a2 = generate_roots(LieType{Family::A, 2});
    CHECK_THROWS_AS(reflect(a2, make_root(IntVec{2, 2}), a2.rho), std::invalid_argument);
}

TEST_CASE("partition of positives under r_theta") {
    const RootSystem a1 = generate_roots(LieType{Family::A, 1});
    const PositivePartition p1 = classify_positives(a1);
    CHECK(p1.theta_part.size() == 1);
    CHECK(p1.special_part.empty());
    CHECK(p1.orthogonal_part.empty());

    const RootSystem a2 = generate_roots(LieType{Family::A, 2});
    const PositivePartition p2 = classify_positives(a2);
    REQUIRE(p2.theta_part.size() == 1);
    CHECK(p2.theta_part[0] == a2.theta);
    std::set<IntVec> specials;
    for (const auto& r : p2.special_part) specials.insert(r.coords);
    CHECK(specials == std::set<IntVec>{{1, 0}, {0, 1}});
    CHECK(p2.orthogonal_part.empty());

    const RootSystem g2 = generate_roots(LieType{Family::G, 2});
    const PositivePartition pg = classify_positives(g2);
    CHECK(pg.theta_part.size() == 1);
    CHECK(pg.special_part.size() == 4);
    CHECK(pg.orthogonal_part.size() == 1);
}

TEST_CASE("partition is exhaustive on every battery type") {
    for (const auto& t : default_battery()) {
        CAPTURE(t.name());
        const RootSystem rs = generate_roots(t);
        const PositivePartition parts = classify_positives(rs);
        CHECK(parts.theta_part.size() + parts.special_part.size() +
                  parts.orthogonal_part.size() ==
              rs.positives.size());
    }
}

TEST_CASE("the unreachable partition case is guarded") {
    // Doctor a copy: claim theta is a simple root so the images match no case.
    RootSystem broken = generate_roots(LieType{Family::A, 2});
    broken.theta = broken.simple_root(0);
    CHECK_THROWS_AS(classify_positives(broken), std::logic_error);
}

TEST_CASE("cached Reflection agrees with the formula path") {
    const RootSystem f4 = generate_roots(LieType{Family::F, 4});
    const Reflection r_theta(f4, f4.theta);
    CHECK(r_theta.axis() == f4.theta);
    for (const IntVec& v : f4.root_set()) {
        const Root root = make_root(v);
        CHECK(r_theta.apply(root) == reflect_root(f4, f4.theta, root));
        // Involution through the cache as well.
        CHECK(r_theta.apply(make_root(r_theta.apply(root))) == v);
    }
    CHECK(r_theta.apply(f4.rho) == reflect(f4, f4.theta, f4.rho));
    CHECK_THROWS_AS(r_theta.apply(make_root(IntVec{9, 9, 9, 9})), std::invalid_argument);
    CHECK_THROWS_AS(Reflection(f4, make_root(IntVec{9, 9, 9, 9})), std::invalid_argument);
}

TEST_CASE("reflection lengths via inversion counting") {
    const RootSystem a1 = generate_roots(LieType{Family::A, 1});
    CHECK(reflection_length(a1, a1.theta) == 1);

    const RootSystem a2 = generate_roots(LieType{Family::A, 2});
    CHECK(reflection_length(a2, a2.theta) == 3);

    const RootSystem g2 = generate_roots(LieType{Family::G, 2});
    CHECK(reflection_length(g2, g2.theta) == 5);
}

TEST_CASE("simple reflections have length one") {
    for (const char* name : {"A4", "B3", "C4", "D5", "F4", "G2"}) {
        const RootSystem rs = generate_roots(parse_lie_type(name));
        for (int i = 0; i < rs.rank(); ++i) {
            CHECK(reflection_length(rs, rs.simple_root(i)) == 1);
        }
    }
}

TEST_CASE("length requires a positive root axis") {
    const RootSystem a2 = generate_roots(LieType{Family::A, 2});
    CHECK_THROWS_AS(reflection_length(a2, make_root(IntVec{-1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(reflection_length(a2, make_root(IntVec{3, 3})), std::invalid_argument);
}

TEST_CASE("reflections are involutive isometries permuting the roots") {
    for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        const RootSystem rs = generate_roots(parse_lie_type(name));
        CAPTURE(name);
        for (const auto& axis : rs.positives) {
            std::set<IntVec> images;
            for (const IntVec& root : rs.root_set()) {
                const Root r = make_root(root);
                const IntVec once = reflect_root(rs, axis, r);
                CHECK(rs.is_root(once));
                images.insert(once);
                CHECK(reflect_root(rs, axis, make_root(once)) == root);
            }
            CHECK(images == rs.root_set());  // bijective on the root set
        }
    }
}

TEST_CASE("reflections preserve the form") {
    const RootSystem f4 = generate_roots(LieType{Family::F, 4});
    for (const auto& axis : f4.positives) {
        for (const auto& x : f4.positives) {
            const RatVec rx = reflect(f4, axis, to_rational(x.coords));
            const RatVec rrho = reflect(f4, axis, f4.rho);
            CHECK(f4.form.inner(rx, rrho) == f4.form.inner(to_rational(x.coords), f4.rho));
        }
    }
}

TEST_CASE("the inversion set of r_theta is S plus theta") {
    for (const auto& t : default_battery()) {
        CAPTURE(t.name());
        const RootSystem rs = generate_roots(t);
        const PositivePartition parts = classify_positives(rs);
        std::set<IntVec> inversions;
        for (const auto& beta : rs.positives) {
            const IntVec image = reflect_root(rs, rs.theta, beta);
            bool negative = true;
            for (auto c : image) {
                if (c > 0) negative = false;
            }
            if (negative) inversions.insert(beta.coords);
        }
        std::set<IntVec> expected;
        expected.insert(rs.theta.coords);
        for (const auto& r : parts.special_part) expected.insert(r.coords);
        CHECK(inversions == expected);
        CHECK(reflection_length(rs, rs.theta) == static_cast<int>(expected.size()));
    }
}
