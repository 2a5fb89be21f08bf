#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "ncprob/poly.hpp"

using namespace ncprob;

namespace {
RingPtr ring_ab() { return std::make_shared<const PolyRing>(std::vector<std::string>{"a", "b"}); }
} // namespace

TEST_CASE("ring arithmetic expands products") {
    RingPtr r = ring_ab();
    Poly a = Poly::variable(r, "a");
    Poly b = Poly::variable(r, "b");
    Poly one = Poly::one(r);
    CHECK((one + a) * (one + b) == one + a + b + a * b);
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK(a - a == Poly::zero(r));
    CHECK(a * Rational(0) == Poly::zero(r));
    CHECK((a * Rational(2, 3)).to_string() == "2/3*a");
}

TEST_CASE("monomials are units and invert as Laurent monomials") {
    RingPtr r = ring_ab();
    Poly a = Poly::variable(r, "a");
    Poly b = Poly::variable(r, "b");
    Poly m = a * a * b * Rational(3, 2);
    CHECK(m.is_unit());
    CHECK(m * m.inverse() == Poly::one(r));
    CHECK(m.inverse() == Poly::variable(r, "a", -2) * Poly::variable(r, "b", -1) * Rational(2, 3));
    CHECK(!(a + b).is_unit());
    CHECK_THROWS_AS((a + b).inverse(), value_error);
    CHECK_THROWS_AS(Poly::zero(r).inverse(), value_error);
    CHECK(Poly::variable(r, "a", -3) * Poly::variable(r, "a", 3) == Poly::one(r));
}

TEST_CASE("nilpotent variable truncates its squares away") {
    RingPtr r = std::make_shared<const PolyRing>(std::vector<std::string>{"eps", "a", "b"}, "eps");
    Poly eps = Poly::variable(r, "eps");
    Poly a = Poly::variable(r, "a");
    Poly b = Poly::variable(r, "b");
    Poly one = Poly::one(r);
    CHECK((one + eps * a) * (one + eps * b) == one + eps * (a + b));
    CHECK(eps * eps == Poly::zero(r));
    CHECK((one + eps * a) * (one - eps * a) == one);
}

TEST_CASE("weighted degree detects homogeneity") {
    RingPtr r = ring_ab();
    Poly a = Poly::variable(r, "a");
    Poly b = Poly::variable(r, "b");
    auto weight = [&](int v) { return r->name(v) == "a" ? 1 : 2; };
    CHECK(*(a * a * b).weighted_degree(weight) == 4);
    CHECK(*(a * a + b).weighted_degree(weight) == 2);
    CHECK(!(a + b).weighted_degree(weight).has_value());
    CHECK(*Poly::zero(r).weighted_degree(weight) == 0);
    CHECK(*Poly::variable(r, "b", -2).weighted_degree(weight) == -4);
}

TEST_CASE("coefficient extraction by monomial") {
    RingPtr r = ring_ab();
    Poly a = Poly::variable(r, "a");
    Poly b = Poly::variable(r, "b");
    Poly p = a * b * Rational(5, 7) + a * Rational(-2) + Poly::one(r);
    CHECK(p.coefficient(Mono{{0, 1}, {1, 1}}) == Rational(5, 7));
    CHECK(p.coefficient(Mono{{0, 1}}) == Rational(-2));
    CHECK(p.coefficient(Mono{}) == Rational(1));
    CHECK(p.coefficient(Mono{{1, 2}}) == Rational(0));
}

TEST_CASE("serialization round-trips through text") {
    RingPtr r = ring_ab();
    Poly a = Poly::variable(r, "a");
    Poly b = Poly::variable(r, "b");
    Poly p = a * a * b * Rational(-3, 4) + b * Rational(1, 2) + Poly::one(r)
           + Poly::variable(r, "a", -1);
    CHECK(Poly::from_string(r, p.to_string()) == p);
    CHECK(Poly::from_string(r, Poly::zero(r).to_string()) == Poly::zero(r));
    CHECK_THROWS_AS(Poly::from_string(r, "1 + q"), parse_error);
}
