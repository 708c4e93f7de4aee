#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include <minorb/rational.hpp>

using minorb::OverflowError;
using minorb::Rational;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(7, 2).num() == 7);
    CHECK(Rational(7, 2).den() == 2);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(3, 4) / Rational(0), std::domain_error);
}

TEST_CASE("field arithmetic on random small rationals") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::int64_t> num(-50, 50);
    std::uniform_int_distribution<std::int64_t> den(1, 30);
    for (int i = 0; i < 500; ++i) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const Rational c(num(rng), den(rng));
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("ordering agrees with cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 3) > Rational(3, 5));
    CHECK(Rational(3, 7) <= Rational(3, 7));
    CHECK(Rational(-5) < Rational(0));
}

TEST_CASE("overflow throws instead of wrapping") {
    const Rational big(INT64_MAX, 1);
    CHECK_THROWS_AS(big + Rational(1), OverflowError);
    CHECK_THROWS_AS(big * Rational(2), OverflowError);
    CHECK_THROWS_AS(Rational(1, INT64_MAX) * Rational(1, 3), OverflowError);
    CHECK_THROWS_AS(-Rational(INT64_MIN, 1), OverflowError);
    // Reduction can bring an intermediate back into range.
    CHECK(big - big == Rational(0));
    CHECK(Rational(INT64_MAX, 2) * Rational(2) == big);
}

TEST_CASE("string rendering") {
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(10, 4).str() == "5/2");
}
