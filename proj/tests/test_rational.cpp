#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncprob/rational.hpp"

using namespace ncprob;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(-6, -4).to_string() == "3/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(5).to_string() == "5");
    CHECK_THROWS_AS(Rational(1, 0), value_error);
}

TEST_CASE("field arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(5, 3) - Rational(1, 3) == Rational(4, 3));
    CHECK(Rational(1, 7) / Rational(2, 7) == Rational(1, 2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK(Rational(4, 9).inverse() == Rational(9, 4));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(7, 2).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), value_error);
    CHECK_THROWS_AS(Rational().inverse(), value_error);
}

TEST_CASE("values larger than any machine word stay exact") {
    Rational big = Rational(10).pow(30) + Rational(1, 3);
    CHECK(big.to_string() ==
          "3000000000000000000000000000001/3");
    CHECK(big - Rational(10).pow(30) == Rational(1, 3));
}

TEST_CASE("serialization round-trips and rejects malformed text") {
    for (const char* t : {"0", "7", "-7", "3/2", "-3/2", "1000000000000000000003/7"}) {
        Rational r = Rational::from_string(t);
        CHECK(r.to_string() == t);
        CHECK(Rational::from_string(r.to_string()) == r);
    }
    CHECK(Rational::from_string("-4/6") == Rational(-2, 3));
    CHECK(Rational::from_string("+3") == Rational(3));
    CHECK_THROWS_AS(Rational::from_string(""), parse_error);
    CHECK_THROWS_AS(Rational::from_string("a/2"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("3.5"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("1/"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), value_error);
}

TEST_CASE("predicates and ordering") {
    CHECK(Rational().is_zero());
    CHECK(Rational(3, 3).is_one());
    CHECK(Rational(8, 4).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(-7, 3).numerator() == "-7");
    CHECK(Rational(-7, 3).denominator() == "3");
}
