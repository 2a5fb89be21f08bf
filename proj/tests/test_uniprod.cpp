#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "ncprob/randgen.hpp"
#include "ncprob/uniprod.hpp"

using namespace ncprob;

namespace {

FreeMonomial alt(std::vector<int> letters, int first_leg = 1) {
    std::vector<Block> raw;
    int leg = first_leg;
    for (int x : letters) {
        raw.push_back(Block{leg, Word{{x}}});
        leg = 3 - leg;
    }
    return make_monomial(raw);
}

} // namespace

TEST_CASE("single-block values are marginals for every kind") {
    Alphabet a = Alphabet::ones(2);
    std::mt19937_64 rng(2);
    Series<Rational> f = random_series(rng, a, 4, false);
    Series<Rational> g = random_series(rng, a, 4, false);
    for (ProductKind kind : {ProductKind::Tensor, ProductKind::Free, ProductKind::Boolean,
                             ProductKind::Monotone, ProductKind::AntiMonotone}) {
        for (const Word& w : enumerate_words(a, 4)) {
            CHECK(eval_product(kind, f, g, make_monomial({Block{1, w}})) == f.coefficient(w));
            CHECK(eval_product(kind, f, g, make_monomial({Block{2, w}})) == g.coefficient(w));
        }
        CHECK(eval_product(kind, f, g, FreeMonomial{}) == Rational(1));
    }
}

TEST_CASE("tensor, boolean and monotone values in closed form") {
    Alphabet a = Alphabet::ones(2);
    std::mt19937_64 rng(4);
    Series<Rational> f = random_series(rng, a, 4, false);
    Series<Rational> g = random_series(rng, a, 4, false);
    FreeMonomial m = make_monomial({Block{1, Word{{1}}}, Block{2, Word{{2}}},
                                    Block{1, Word{{2, 1}}}, Block{2, Word{{1}}}});
    // Tensor: each leg's letters joined in order.
    CHECK(eval_product(ProductKind::Tensor, f, g, m) ==
          f.coefficient(Word{{1, 2, 1}}) * g.coefficient(Word{{2, 1}}));
    // Boolean: every block is a marginal factor.
    CHECK(eval_product(ProductKind::Boolean, f, g, m) ==
          f.coefficient(Word{{1}}) * g.coefficient(Word{{2}}) * f.coefficient(Word{{2, 1}}) *
              g.coefficient(Word{{1}}));
    // Monotone: the first leg joins across, the second factors blockwise.
    CHECK(eval_product(ProductKind::Monotone, f, g, m) ==
          f.coefficient(Word{{1, 2, 1}}) * g.coefficient(Word{{2}}) * g.coefficient(Word{{1}}));
    // Anti-monotone mirrors monotone.
    CHECK(eval_product(ProductKind::AntiMonotone, f, g, m) ==
          f.coefficient(Word{{1}}) * f.coefficient(Word{{2, 1}}) * g.coefficient(Word{{2, 1}}));
}

TEST_CASE("free product of a 5-block alternating monomial") {
    Alphabet a(3, {1, 1, 1});
    RingPtr ring = symbolic_law_ring(a, 3);
    auto X = [&](std::vector<int> ls) {
        return Poly::variable(ring, "X:" + word_to_string(Word{std::move(ls)}));
    };
    auto Y = [&](std::vector<int> ls) {
        return Poly::variable(ring, "Y:" + word_to_string(Word{std::move(ls)}));
    };
    Poly got = eval_free_symbolic(a, 3, alt({1, 1, 2, 2, 3}));
    Poly want = X({1, 2, 3}) * Y({1}) * Y({2})
              + X({1, 3}) * X({2}) * Y({1, 2})
              - X({1, 3}) * X({2}) * Y({1}) * Y({2});
    CHECK(got == want);
}

TEST_CASE("free product of a 6-block alternating monomial") {
    Alphabet a(3, {1, 1, 1});
    RingPtr ring = symbolic_law_ring(a, 3);
    auto X = [&](std::vector<int> ls) {
        return Poly::variable(ring, "X:" + word_to_string(Word{std::move(ls)}));
    };
    auto Y = [&](std::vector<int> ls) {
        return Poly::variable(ring, "Y:" + word_to_string(Word{std::move(ls)}));
    };
    Poly got = eval_free_symbolic(a, 3, alt({1, 1, 2, 2, 3, 3}));
    Poly want = X({1, 2, 3}) * Y({1}) * Y({2}) * Y({3})
              + X({1}) * X({2}) * X({3}) * Y({1, 2, 3})
              + X({1, 3}) * X({2}) * Y({1, 2}) * Y({3})
              - X({1, 3}) * X({2}) * Y({1}) * Y({2}) * Y({3})
              + X({1, 2}) * X({3}) * Y({1}) * Y({2, 3})
              - X({1}) * X({2}) * X({3}) * Y({1}) * Y({2, 3})
              - X({1}) * X({2, 3}) * Y({1}) * Y({2}) * Y({3})
              - X({1}) * X({2}) * X({3}) * Y({1, 2}) * Y({3})
              - X({1, 2}) * X({3}) * Y({1}) * Y({2}) * Y({3})
              + X({1}) * X({2, 3}) * Y({1, 3}) * Y({2})
              - X({1}) * X({2}) * X({3}) * Y({1, 3}) * Y({2})
              + X({1}) * X({2}) * X({3}) * Y({1}) * Y({2}) * Y({3}) * Rational(2);
    CHECK(got == want);
}

TEST_CASE("memoized free evaluation agrees with plain recursion") {
    Alphabet a = Alphabet::ones(2);
    std::mt19937_64 rng(6);
    Series<Rational> f = random_series(rng, a, 6, false);
    Series<Rational> g = random_series(rng, a, 6, false);
    // Plain recursion, written against the defining alternating-sum formula.
    std::function<Rational(const FreeMonomial&)> naive = [&](const FreeMonomial& m) -> Rational {
        if (m.empty()) return Rational(1);
        if (m.size() == 1)
            return m.blocks[0].leg == 1 ? f.coefficient(m.blocks[0].word)
                                        : g.coefficient(m.blocks[0].word);
        Rational total;
        const int n = m.size();
        for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
            std::vector<int> sub;
            Rational outside(1);
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) sub.push_back(i);
                else
                    outside *= m.blocks[i].leg == 1 ? f.coefficient(m.blocks[i].word)
                                                    : g.coefficient(m.blocks[i].word);
            }
            Rational term = naive(restrict_monomial(m, sub)) * outside;
            if ((n - static_cast<int>(sub.size())) % 2 == 0) total -= term;
            else total += term;
        }
        return total;
    };
    for (int t = 0; t < 6; ++t) {
        int len = 2 + static_cast<int>(rng() % 5);
        std::vector<int> letters;
        for (int i = 0; i < len; ++i) letters.push_back(1 + static_cast<int>(rng() % 2));
        FreeMonomial m = alt(letters, 1 + static_cast<int>(rng() % 2));
        CHECK(eval_product(ProductKind::Free, f, g, m) == naive(m));
    }
}

TEST_CASE("one evaluator reuses its table across calls") {
    Alphabet a = Alphabet::ones(2);
    std::mt19937_64 rng(8);
    Series<Rational> f = random_series(rng, a, 6, false);
    Series<Rational> g = random_series(rng, a, 6, false);
    ProductEvaluator<Rational> ev(ProductKind::Free, f, g);
    FreeMonomial m = alt({1, 2, 1, 2, 1, 2});
    Rational first = ev.eval(m);
    CHECK(ev.eval(m) == first);
    CHECK(ev.eval(alt({1, 2, 1, 2})) == eval_product(ProductKind::Free, f, g, alt({1, 2, 1, 2})));
}
