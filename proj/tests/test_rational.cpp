#include "hvs/rational.hpp"

#include <doctest.h>

#include <limits>

#include "hvs/errors.hpp"
#include "hvs/oracle.hpp"

using hvs::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), hvs::DomainError);
}

TEST_CASE("parse accepts integers, fractions and decimals") {
    CHECK(Rational::parse("3/10") == Rational(3, 10));
    CHECK(Rational::parse("-2/5") == Rational(-2, 5));
    CHECK(Rational::parse("0.3") == Rational(3, 10));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("-1") == Rational(-1));
    CHECK(Rational::parse("+1/3") == Rational(1, 3));
    CHECK(Rational::parse("2.") == Rational(2));
    for (const char* bad : {"", "-", "1/0", "1//2", "a", "1.2.3", "1 /2", "0x1"}) {
        CHECK_THROWS_AS(Rational::parse(bad), hvs::DomainError);
    }
}

TEST_CASE("exact ordering and arithmetic") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1) == Rational(-1, 2));
    CHECK(Rational(3, 10) / Rational(1, 2) == Rational(3, 5));
    CHECK(-(Rational(-2, 5) / Rational(-2, 5)) == Rational(-1));
    CHECK(hvs::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
    CHECK(hvs::max(Rational(-1, 3), Rational(-1, 2)) == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), hvs::DomainError);
}

TEST_CASE("grade range predicates") {
    CHECK(hvs::is_unit_grade(Rational(0)));
    CHECK(hvs::is_unit_grade(Rational(1)));
    CHECK_FALSE(hvs::is_unit_grade(Rational(3, 2)));
    CHECK_FALSE(hvs::is_unit_grade(Rational(-1, 10)));
    CHECK(hvs::is_negative_unit_grade(Rational(-1)));
    CHECK_FALSE(hvs::is_negative_unit_grade(Rational(1, 10)));
}

TEST_CASE("results that cannot reduce back into 64 bits are rejected") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Rational(big, 1) + Rational(big, 1), hvs::DomainError);
    CHECK_THROWS_AS(Rational(big, 1) * Rational(big, 1), hvs::DomainError);
    // intermediates beyond 64 bits are fine when the reduced result fits
    CHECK(Rational(big, 2) + Rational(big, 2) == Rational(big));
}

TEST_CASE("field laws hold on random small rationals") {
    hvs::oracle::SplitMix64 rng(11);
    auto draw = [&] {
        std::int64_t num = static_cast<std::int64_t>(rng.index(41)) - 20;
        std::int64_t den = static_cast<std::int64_t>(rng.index(12)) + 1;
        return Rational(num, den);
    };
    for (int i = 0; i < 500; ++i) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - b == -(b - a));
        CHECK(Rational::parse(a.str()) == a);
        if (b != Rational(0)) CHECK((a / b) * b == a);
    }
}
