#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncprob/boxed.hpp"
#include "ncprob/randgen.hpp"

using namespace ncprob;

TEST_CASE("boxed product at low degree, one letter") {
    Alphabet a = Alphabet::ones(1);
    std::mt19937_64 rng(21);
    Series<Rational> f = random_series(rng, a, 3, false);
    Series<Rational> g = random_series(rng, a, 3, false);
    Series<Rational> h = boxed_mul(f, g);
    Word w1{{1}}, w2{{1, 1}}, w3{{1, 1, 1}};
    Rational f1 = f.coefficient(w1), f2 = f.coefficient(w2), f3 = f.coefficient(w3);
    Rational g1 = g.coefficient(w1), g2 = g.coefficient(w2), g3 = g.coefficient(w3);
    CHECK(h.coefficient(w1) == f1 * g1);
    CHECK(h.coefficient(w2) == f2 * g1 * g1 + f1 * f1 * g2);
    // NC(3): full block, three singletons, and the three two-block shapes.
    CHECK(h.coefficient(w3) == f3 * g1 * g1 * g1 + f1 * f1 * f1 * g3 +
                                   Rational(3) * f1 * f2 * g1 * g2);
}

TEST_CASE("boxed product over two letters uses restricted words") {
    Alphabet a = Alphabet::ones(2);
    std::mt19937_64 rng(22);
    Series<Rational> f = random_series(rng, a, 2, false);
    Series<Rational> g = random_series(rng, a, 2, false);
    Series<Rational> h = boxed_mul(f, g);
    Word w{{1, 2}};
    CHECK(h.coefficient(w) ==
          f.coefficient(w) * g.coefficient(Word{{1}}) * g.coefficient(Word{{2}}) +
              f.coefficient(Word{{1}}) * f.coefficient(Word{{2}}) * g.coefficient(w));
}

TEST_CASE("neutral series is a two-sided unit") {
    for (int s = 1; s <= 2; ++s) {
        Alphabet a = Alphabet::ones(s);
        std::mt19937_64 rng(23 + s);
        Series<Rational> f = random_series(rng, a, 4, false);
        Series<Rational> e = boxed_neutral<Rational>(a, 4);
        CHECK(boxed_mul(f, e) == f);
        CHECK(boxed_mul(e, f) == f);
    }
}

TEST_CASE("moebius series has signed Catalan coefficients") {
    Alphabet a = Alphabet::ones(1);
    Series<Rational> m = moeb_series(a, 6);
    const long want[] = {0, 1, -1, 2, -5, 14, -42};
    for (int n = 1; n <= 6; ++n)
        CHECK(m.coefficient(Word{std::vector<int>(n, 1)}) == Rational(want[n]));
}

TEST_CASE("moebius inverts zeta on both sides") {
    for (auto [s, deg] : {std::pair<int, int>{1, 6}, {2, 4}}) {
        Alphabet a = Alphabet::ones(s);
        Series<Rational> z = zeta_series<Rational>(a, deg);
        Series<Rational> m = moeb_series(a, deg);
        Series<Rational> e = boxed_neutral<Rational>(a, deg);
        CHECK(boxed_mul(z, m) == e);
        CHECK(boxed_mul(m, z) == e);
    }
}

TEST_CASE("cumulants of low-degree moments") {
    Alphabet a = Alphabet::ones(1);
    std::mt19937_64 rng(25);
    Series<Rational> f = random_series(rng, a, 3, false);
    Series<Rational> k = r_transform(f);
    Rational m1 = f.coefficient(Word{{1}});
    Rational m2 = f.coefficient(Word{{1, 1}});
    Rational m3 = f.coefficient(Word{{1, 1, 1}});
    CHECK(k.coefficient(Word{{1}}) == m1);
    CHECK(k.coefficient(Word{{1, 1}}) == m2 - m1 * m1);
    CHECK(k.coefficient(Word{{1, 1, 1}}) == m3 - Rational(3) * m1 * m2 + Rational(2) * m1.pow(3));
    CHECK(r_transform_inverse(k) == f);
    CHECK(r_transform(r_transform_inverse(f)) == f);
}

TEST_CASE("special values of the cumulant map") {
    Alphabet a = Alphabet::ones(2);
    CHECK(r_transform(zeta_series<Rational>(a, 4)) == boxed_neutral<Rational>(a, 4));
    CHECK(r_transform(boxed_neutral<Rational>(a, 4)) == moeb_series(a, 4));
    CHECK(r_transform_inverse(moeb_series(a, 4)) == boxed_neutral<Rational>(a, 4));
}

TEST_CASE("bridge between the two multiplication pipelines") {
    Alphabet a = Alphabet::ones(2);
    std::mt19937_64 rng(26);
    Series<Rational> f = random_series(rng, a, 3, true);
    Series<Rational> g = random_series(rng, a, 3, true);
    BridgeReport rep = verify_bridge(f, g);
    CHECK(rep.equal);
    CHECK(rep.detail == "pipelines agree");
}

TEST_CASE("boxed product is associative and commutative only at one letter") {
    Alphabet a1 = Alphabet::ones(1);
    std::mt19937_64 rng(27);
    Series<Rational> f = random_series(rng, a1, 4, false);
    Series<Rational> g = random_series(rng, a1, 4, false);
    Series<Rational> h = random_series(rng, a1, 4, false);
    CHECK(boxed_mul(boxed_mul(f, g), h) == boxed_mul(f, boxed_mul(g, h)));
    CHECK(boxed_mul(f, g) == boxed_mul(g, f));
    Alphabet a2 = Alphabet::ones(2);
    Series<Rational> p = random_series(rng, a2, 3, false);
    Series<Rational> q = random_series(rng, a2, 3, false);
    CHECK(boxed_mul(boxed_mul(p, q), p) == boxed_mul(p, boxed_mul(q, p)));
    CHECK(boxed_mul(p, q) != boxed_mul(q, p));
}
