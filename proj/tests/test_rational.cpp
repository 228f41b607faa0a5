#include "doctest.h"

#include "coarsequot/rational.hpp"
#include "coarsequot/errors.hpp"

using coarsequot::Rational;

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(4, -8) == Rational(-1, 2));
    CHECK((Rational(2, 33) * Rational(33, 2)) == Rational(1));
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(coarsequot::rat_max(Rational(3), Rational(10, 4)) == Rational(3));
    CHECK(coarsequot::rat_min(Rational(3), Rational(10, 4)) == Rational(5, 2));
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("3.25") == Rational(13, 4));
    CHECK_THROWS_AS(Rational(1, 0), coarsequot::Error);
}

TEST_CASE("rational string form") {
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(4, 2).str() == "2");
}
