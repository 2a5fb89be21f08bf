#include "ncprob/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ncprob/boxed.hpp"
#include "ncprob/dualconv.hpp"
#include "ncprob/flowlog.hpp"
#include "ncprob/ncpart.hpp"
#include "ncprob/randgen.hpp"
#include "ncprob/series.hpp"
#include "ncprob/shuffle.hpp"
#include "ncprob/uniprod.hpp"
#include "ncprob/words.hpp"

namespace ncprob {
namespace {

using Rng = std::mt19937_64;

Rng seeded(unsigned long long seed, unsigned long long salt) {
    return Rng(seed * 1000003ULL + salt * 97ULL + 13ULL);
}

CheckResult result(const std::string& name, bool pass, const std::string& detail) {
    return CheckResult{name, pass, detail};
}

std::string plural(int n, const std::string& unit) {
    return std::to_string(n) + " " + unit + (n == 1 ? "" : "s");
}

// ---------------------------------------------------------------- criterion 1

CheckResult check_nc_catalan(int nmax) {
    for (int n = 1; n <= nmax; ++n) {
        auto count = static_cast<std::int64_t>(enumerate_nc(n).size());
        if (count != catalan_number(n))
            return result("nc-catalan-count", false,
                          "n=" + std::to_string(n) + ": " + std::to_string(count) +
                              " != " + std::to_string(catalan_number(n)));
        for (const NCPartition& p : enumerate_nc(n))
            if (!is_noncrossing(p))
                return result("nc-catalan-count", false,
                              "crossing partition emitted: " + partition_to_string(p));
    }
    return result("nc-catalan-count", true,
                  "counts match Catalan numbers for n <= " + std::to_string(nmax));
}

CheckResult check_kreweras_blocks(int nmax) {
    for (int n = 1; n <= nmax; ++n)
        for (const NCPartition& p : enumerate_nc(n)) {
            NCPartition k = kreweras(p);
            if (p.block_count() + k.block_count() != n + 1)
                return result("nc-kreweras-blocks", false,
                              partition_to_string(p) + " -> " + partition_to_string(k));
            if (!is_noncrossing(k))
                return result("nc-kreweras-blocks", false,
                              "complement crosses: " + partition_to_string(k));
        }
    return result("nc-kreweras-blocks", true,
                  "|p| + |K(p)| = n+1 on all of NC(n), n <= " + std::to_string(nmax));
}

CheckResult check_kreweras_bijection(int nmax) {
    for (int n = 1; n <= nmax; ++n) {
        std::set<NCPartition> image;
        for (const NCPartition& p : enumerate_nc(n)) image.insert(kreweras(p));
        if (static_cast<std::int64_t>(image.size()) != catalan_number(n))
            return result("nc-kreweras-bijection", false,
                          "n=" + std::to_string(n) + ": image size " + std::to_string(image.size()));
    }
    return result("nc-kreweras-bijection", true,
                  "complement is a bijection on NC(n), n <= " + std::to_string(nmax));
}

// ---------------------------------------------------------------- criterion 2

// The two displayed free-product evaluations on alternating single-letter
// monomials with three distinct letters, compared term for term.
CheckResult check_free_expansion_5() {
    Alphabet a(3, {1, 1, 1});
    RingPtr ring = symbolic_law_ring(a, 3);
    auto X = [&](std::vector<int> ls) {
        return Poly::variable(ring, "X:" + word_to_string(Word{std::move(ls)}));
    };
    auto Y = [&](std::vector<int> ls) {
        return Poly::variable(ring, "Y:" + word_to_string(Word{std::move(ls)}));
    };
    FreeMonomial m = make_monomial({Block{1, Word{{1}}}, Block{2, Word{{1}}},
                                    Block{1, Word{{2}}}, Block{2, Word{{2}}},
                                    Block{1, Word{{3}}}});
    Poly got = eval_free_symbolic(a, 3, m);
    Poly want = X({1, 2, 3}) * Y({1}) * Y({2})
              + X({1, 3}) * X({2}) * Y({1, 2})
              - X({1, 3}) * X({2}) * Y({1}) * Y({2});
    if (got != want)
        return result("free-expansion-5block", false, "got " + got.to_string());
    return result("free-expansion-5block", true, "3-term expansion reproduced");
}

CheckResult check_free_expansion_6() {
    Alphabet a(3, {1, 1, 1});
    RingPtr ring = symbolic_law_ring(a, 3);
    auto X = [&](std::vector<int> ls) {
        return Poly::variable(ring, "X:" + word_to_string(Word{std::move(ls)}));
    };
    auto Y = [&](std::vector<int> ls) {
        return Poly::variable(ring, "Y:" + word_to_string(Word{std::move(ls)}));
    };
    FreeMonomial m = make_monomial({Block{1, Word{{1}}}, Block{2, Word{{1}}},
                                    Block{1, Word{{2}}}, Block{2, Word{{2}}},
                                    Block{1, Word{{3}}}, Block{2, Word{{3}}}});
    Poly got = eval_free_symbolic(a, 3, m);
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
    if (got != want)
        return result("free-expansion-6block", false, "got " + got.to_string());
    return result("free-expansion-6block", true, "12-term expansion reproduced");
}

// ---------------------------------------------------------------- criterion 3

const ProductKind kAllKinds[] = {ProductKind::Tensor, ProductKind::Free, ProductKind::Boolean,
                                 ProductKind::Monotone, ProductKind::AntiMonotone};

CheckResult check_product_marginal(int s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 11);
    Alphabet a = Alphabet::ones(s);
    Series<Rational> f = random_series(rng, a, max_deg, false);
    Series<Rational> g = random_series(rng, a, max_deg, false);
    for (ProductKind kind : kAllKinds)
        for (const Word& w : enumerate_words(a, max_deg)) {
            Rational left = eval_product(kind, f, g, make_monomial({Block{1, w}}));
            Rational right = eval_product(kind, f, g, make_monomial({Block{2, w}}));
            if (left != f.coefficient(w) || right != g.coefficient(w))
                return result("product-marginal", false,
                              product_kind_name(kind) + " at " + word_to_string(w));
        }
    return result("product-marginal", true, "single-block values are the marginals, all kinds");
}

CheckResult check_product_associativity(int s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 17 + static_cast<unsigned>(s));
    Alphabet a = Alphabet::ones(s);
    for (ProductKind kind : kAllKinds)
        for (Flavor flavor : {Flavor::Additive, Flavor::Multiplicative}) {
            DualGroupSpec spec{flavor, {}};
            bool one = flavor == Flavor::Multiplicative;
            Series<Rational> f = random_series(rng, a, max_deg, one);
            Series<Rational> g = random_series(rng, a, max_deg, one);
            Series<Rational> h = random_series(rng, a, max_deg, one);
            Series<Rational> left = convolve(kind, spec, convolve(kind, spec, f, g), h);
            Series<Rational> right = convolve(kind, spec, f, convolve(kind, spec, g, h));
            if (left != right)
                return result("product-associativity", false,
                              product_kind_name(kind) + "/" + flavor_name(flavor) +
                                  " s=" + std::to_string(s));
        }
    return result("product-associativity", true,
                  "all five kinds, both flavors, s=" + std::to_string(s));
}

CheckResult check_product_units(int s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 19 + static_cast<unsigned>(s));
    Alphabet a = Alphabet::ones(s);
    Series<Rational> zero = series_zero<Rational>(a, max_deg, false);
    Series<Rational> ones = series_all_ones<Rational>(a, max_deg);
    std::string bad;
    for (ProductKind kind : kAllKinds) {
        DualGroupSpec add = DualGroupSpec::additive();
        Series<Rational> f = random_series(rng, a, max_deg, false);
        if (convolve(kind, add, f, zero) != f || convolve(kind, add, zero, f) != f)
            bad += product_kind_name(kind) + "/add ";
    }
    DualGroupSpec mul = DualGroupSpec::multiplicative();
    for (ProductKind kind : {ProductKind::Tensor, ProductKind::Free}) {
        Series<Rational> f = random_series(rng, a, max_deg, true);
        if (convolve(kind, mul, f, ones) != f || convolve(kind, mul, ones, f) != f)
            bad += product_kind_name(kind) + "/mul ";
    }
    {
        Series<Rational> f = random_series(rng, a, max_deg, true);
        if (convolve(ProductKind::Monotone, mul, f, ones) != f) bad += "monotone/right ";
        if (max_deg >= 2 && convolve(ProductKind::Monotone, mul, ones, f) == f)
            bad += "monotone/left-unexpectedly-neutral ";
        if (convolve(ProductKind::AntiMonotone, mul, ones, f) != f) bad += "antimonotone/left ";
        if (max_deg >= 2 && convolve(ProductKind::AntiMonotone, mul, f, ones) == f)
            bad += "antimonotone/right-unexpectedly-neutral ";
    }
    if (max_deg >= 2) {
        // The boolean multiplicative convolution reads only single-letter
        // coefficients of both arguments, so no candidate can act as a unit:
        // two series equal on letters are indistinguishable on every product.
        Series<Rational> f1 = random_series(rng, a, max_deg, true);
        Series<Rational> f2 = f1;
        f2.set(Word{{1, 1}}, f1.coefficient(Word{{1, 1}}) + Rational(1));
        Series<Rational> u = random_series(rng, a, max_deg, true);
        if (convolve(ProductKind::Boolean, mul, f1, u) != convolve(ProductKind::Boolean, mul, f2, u))
            bad += "boolean/distinguished ";
        if (convolve(ProductKind::Boolean, mul, f1, ones) == f1) bad += "boolean/ones-neutral ";
    }
    if (!bad.empty()) return result("product-units", false, bad);
    return result("product-units", true,
                  "two-sided 0 (additive); 1-series two-sided for tensor/free, one-sided for "
                  "monotone kinds, none for boolean");
}

CheckResult check_product_commutativity(int s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 23 + static_cast<unsigned>(s));
    Alphabet a = Alphabet::ones(s);
    for (ProductKind kind : {ProductKind::Tensor, ProductKind::Free, ProductKind::Boolean}) {
        DualGroupSpec add = DualGroupSpec::additive();
        Series<Rational> f = random_series(rng, a, max_deg, false);
        Series<Rational> g = random_series(rng, a, max_deg, false);
        if (convolve(kind, add, f, g) != convolve(kind, add, g, f))
            return result("product-commutativity", false, product_kind_name(kind) + "/add");
    }
    DualGroupSpec mul = DualGroupSpec::multiplicative();
    for (ProductKind kind : {ProductKind::Tensor, ProductKind::Boolean}) {
        Series<Rational> f = random_series(rng, a, max_deg, true);
        Series<Rational> g = random_series(rng, a, max_deg, true);
        if (convolve(kind, mul, f, g) != convolve(kind, mul, g, f))
            return result("product-commutativity", false, product_kind_name(kind) + "/mul");
    }
    {
        Alphabet a1 = Alphabet::ones(1);
        Series<Rational> f = random_series(rng, a1, max_deg, true);
        Series<Rational> g = random_series(rng, a1, max_deg, true);
        if (convolve(ProductKind::Free, mul, f, g) != convolve(ProductKind::Free, mul, g, f))
            return result("product-commutativity", false, "free/mul s=1");
    }
    return result("product-commutativity", true,
                  "tensor/free/boolean additive, tensor/boolean multiplicative, free "
                  "multiplicative at one letter");
}

// Witnesses that the remaining combinations genuinely fail to commute.
CheckResult check_product_noncommutativity(unsigned long long seed) {
    Rng rng = seeded(seed, 29);
    std::string missing;
    auto witness = [&](ProductKind kind, Flavor flavor, const Alphabet& a, int max_deg) {
        DualGroupSpec spec{flavor, {}};
        bool one = flavor == Flavor::Multiplicative;
        for (int attempt = 0; attempt < 5; ++attempt) {
            Series<Rational> f = random_series(rng, a, max_deg, one);
            Series<Rational> g = random_series(rng, a, max_deg, one);
            if (convolve(kind, spec, f, g) != convolve(kind, spec, g, f)) return true;
        }
        return false;
    };
    if (!witness(ProductKind::Monotone, Flavor::Additive, Alphabet::ones(1), 3))
        missing += "monotone/add ";
    if (!witness(ProductKind::AntiMonotone, Flavor::Additive, Alphabet::ones(1), 3))
        missing += "antimonotone/add ";
    if (!witness(ProductKind::Monotone, Flavor::Multiplicative, Alphabet::ones(1), 3))
        missing += "monotone/mul ";
    if (!witness(ProductKind::Free, Flavor::Multiplicative, Alphabet::ones(2), 3))
        missing += "free/mul-s2 ";
    bool boxed_witness = false;
    for (int attempt = 0; attempt < 5 && !boxed_witness; ++attempt) {
        Alphabet a2 = Alphabet::ones(2);
        Series<Rational> f = random_series(rng, a2, 3, false);
        Series<Rational> g = random_series(rng, a2, 3, false);
        boxed_witness = boxed_mul(f, g) != boxed_mul(g, f);
    }
    if (!boxed_witness) missing += "boxed-s2 ";
    {
        Alphabet a1 = Alphabet::ones(1);
        Series<Rational> f = random_series(rng, a1, 5, false);
        Series<Rational> g = random_series(rng, a1, 5, false);
        if (boxed_mul(f, g) != boxed_mul(g, f)) missing += "boxed-s1-should-commute ";
    }
    if (!missing.empty()) return result("product-noncommutativity", false, "no witness: " + missing);
    return result("product-noncommutativity", true,
                  "degree-3 witnesses found; one-letter boxed product commutes");
}

// Swapping both legs and arguments fixes the tensor/free/boolean values; the
// monotone value moves on the 4-block alternating monomial.
CheckResult check_eval_commutativity(unsigned long long seed) {
    Rng rng = seeded(seed, 31);
    Alphabet a = Alphabet::ones(2);
    auto swap_legs = [](const FreeMonomial& m) {
        std::vector<Block> raw;
        for (const Block& b : m.blocks) raw.push_back(Block{b.leg == 1 ? 2 : 1, b.word});
        return contract_blocks(raw);
    };
    std::vector<FreeMonomial> monos;
    for (int t = 0; t < 8; ++t) {
        int len = 2 + static_cast<int>(rng() % 5);
        std::vector<Block> raw;
        int leg = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < len; ++i) {
            raw.push_back(Block{leg, Word{{1 + static_cast<int>(rng() % 2)}}});
            leg = 3 - leg;
        }
        monos.push_back(make_monomial(raw));
    }
    Series<Rational> f = random_series(rng, a, 6, false);
    Series<Rational> g = random_series(rng, a, 6, false);
    for (ProductKind kind : {ProductKind::Tensor, ProductKind::Free, ProductKind::Boolean})
        for (const FreeMonomial& m : monos)
            if (eval_product(kind, f, g, m) != eval_product(kind, g, f, swap_legs(m)))
                return result("eval-commutativity", false,
                              product_kind_name(kind) + " moved on " + monomial_to_string(m));
    FreeMonomial m4 = make_monomial({Block{1, Word{{1}}}, Block{2, Word{{1}}},
                                     Block{1, Word{{2}}}, Block{2, Word{{2}}}});
    bool moved = false;
    for (int attempt = 0; attempt < 5 && !moved; ++attempt) {
        Series<Rational> p = random_series(rng, a, 6, false);
        Series<Rational> q = random_series(rng, a, 6, false);
        moved = eval_product(ProductKind::Monotone, p, q, m4) !=
                eval_product(ProductKind::Monotone, q, p, swap_legs(m4));
    }
    if (!moved)
        return result("eval-commutativity", false, "monotone stayed symmetric on the 4-block");
    return result("eval-commutativity", true,
                  "leg+argument swap fixes tensor/free/boolean, moves monotone");
}

// Plain recursive evaluation with no memo table, as an independent oracle.
Rational naive_free(const Series<Rational>& f, const Series<Rational>& g, const FreeMonomial& m) {
    if (m.empty()) return Rational(1);
    if (m.size() == 1) {
        const Block& b = m.blocks[0];
        return b.leg == 1 ? f.coefficient(b.word) : g.coefficient(b.word);
    }
    const int n = m.size();
    Rational total;
    std::vector<int> sub;
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        sub.clear();
        Rational outside(1);
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) sub.push_back(i);
            else
                outside *= m.blocks[i].leg == 1 ? f.coefficient(m.blocks[i].word)
                                                : g.coefficient(m.blocks[i].word);
        }
        Rational term = naive_free(f, g, restrict_monomial(m, sub)) * outside;
        if ((n - static_cast<int>(sub.size())) % 2 == 0) total -= term;
        else total += term;
    }
    return total;
}

CheckResult check_free_memo_oracle(unsigned long long seed) {
    Rng rng = seeded(seed, 37);
    Alphabet a = Alphabet::ones(2);
    Series<Rational> f = random_series(rng, a, 6, false);
    Series<Rational> g = random_series(rng, a, 6, false);
    for (int t = 0; t < 8; ++t) {
        int len = 2 + static_cast<int>(rng() % 5);
        std::vector<Block> raw;
        int leg = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < len; ++i) {
            raw.push_back(Block{leg, Word{{1 + static_cast<int>(rng() % 2)}}});
            leg = 3 - leg;
        }
        FreeMonomial m = make_monomial(raw);
        if (eval_product(ProductKind::Free, f, g, m) != naive_free(f, g, m))
            return result("free-memo-oracle", false, monomial_to_string(m));
    }
    return result("free-memo-oracle", true, "memoized equals plain recursion on 8 monomials");
}

CheckResult check_free_symbolic_homogeneity() {
    Alphabet a(2, {1, 2});
    std::vector<FreeMonomial> monos{
        make_monomial({Block{1, Word{{1}}}, Block{2, Word{{2}}}, Block{1, Word{{1, 1}}}}),
        make_monomial({Block{2, Word{{2}}}, Block{1, Word{{2}}}, Block{2, Word{{1}}}}),
        make_monomial({Block{1, Word{{1}}}, Block{2, Word{{1}}}, Block{1, Word{{1}}},
                       Block{2, Word{{1}}}}),
    };
    for (const FreeMonomial& m : monos) {
        int total = 0;
        for (const Block& b : m.blocks) total += degree(a, b.word);
        RingPtr ring = symbolic_law_ring(a, total);
        Series<Poly> X = symbolic_series(a, total, "X", ring, false);
        Series<Poly> Y = symbolic_series(a, total, "Y", ring, false);
        Poly p = eval_product(ProductKind::Free, X, Y, m);
        auto deg = p.weighted_degree([&](int v) {
            return degree(a, parse_word(ring->name(v).substr(2)));
        });
        if (!deg || *deg != total)
            return result("free-symbolic-homogeneity", false, monomial_to_string(m));
    }
    return result("free-symbolic-homogeneity", true,
                  "every expansion term carries the total block degree");
}

// ---------------------------------------------------------------- criterion 4

CheckResult check_bridge(int pairs_per_s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 41);
    for (int s = 1; s <= 2; ++s) {
        Alphabet a = Alphabet::ones(s);
        for (int t = 0; t < pairs_per_s; ++t) {
            Series<Rational> f = random_series(rng, a, max_deg, true);
            Series<Rational> g = random_series(rng, a, max_deg, true);
            BridgeReport rep = verify_bridge(f, g);
            if (!rep.equal)
                return result("bridge-identity", false,
                              "s=" + std::to_string(s) + " pair " + std::to_string(t) + ": " +
                                  rep.detail);
        }
    }
    return result("bridge-identity", true,
                  plural(2 * pairs_per_s, "seeded pair") + " agree across independent pipelines");
}

// ---------------------------------------------------------------- criterion 5

CheckResult check_decomposition(int s, int max_len) {
    Alphabet a = Alphabet::ones(s);
    LawEngine engine(ProductKind::Free, DualGroupSpec::multiplicative(), a, max_len, true);
    int count = 0;
    for (const Word& w : enumerate_words(a, max_len)) {
        DecompositionReport rep = verify_decomposition(a, w, engine);
        if (!rep.pure_ok || !rep.catalan_ok)
            return result("canonical-decomposition-s" + std::to_string(s), false,
                          word_to_string(w) + ": pure (" + rep.pure_x.to_string() + ", " +
                              rep.pure_y.to_string() + "), alternating " +
                              rep.catalan_term.to_string());
        ++count;
    }
    return result("canonical-decomposition-s" + std::to_string(s), true,
                  plural(count, "word") + " up to length " + std::to_string(max_len) +
                      " carry coefficients (1, 1, (-1)^{n-1} Catalan(n-1))");
}

// ---------------------------------------------------------------- criterion 6

CheckResult check_inverse_symbolic() {
    Alphabet a = Alphabet::ones(2);
    RingPtr ring = symbolic_law_ring(a, 2);
    auto X = [&](std::vector<int> ls, int e) {
        return Poly::variable(ring, "X:" + word_to_string(Word{std::move(ls)}), e);
    };
    Series<Poly> f = symbolic_series(a, 2, "X", ring, true);
    Series<Poly> g = boxtimesV_inverse(f);
    auto two = Poly::constant(ring, Rational(2));
    for (int i = 1; i <= 2; ++i)
        if (g.coefficient(Word{{i}}) != X({i}, -1))
            return result("inverse-symbolic", false, "letter " + std::to_string(i));
    for (int i1 = 1; i1 <= 2; ++i1)
        for (int i2 = 1; i2 <= 2; ++i2) {
            Poly want = i1 == i2 ? two * X({i1}, -2) - X({i1, i2}, 1) * X({i1}, -4)
                                 : two * X({i1}, -1) * X({i2}, -1) -
                                       X({i1, i2}, 1) * X({i1}, -2) * X({i2}, -2);
            if (g.coefficient(Word{{i1, i2}}) != want)
                return result("inverse-symbolic", false,
                              word_to_string(Word{{i1, i2}}) + ": got " +
                                  g.coefficient(Word{{i1, i2}}).to_string());
        }
    return result("inverse-symbolic", true,
                  "displayed coefficient formulas reproduced at degrees 1 and 2");
}

CheckResult check_inverse_random(int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 43);
    DualGroupSpec mul = DualGroupSpec::multiplicative();
    for (int s = 1; s <= 2; ++s) {
        Alphabet a = Alphabet::ones(s);
        Series<Rational> ones = series_all_ones<Rational>(a, max_deg);
        for (int t = 0; t < 3; ++t) {
            Series<Rational> f = random_series(rng, a, max_deg, true, RandomDomain::Invertible);
            Series<Rational> inv = boxtimesV_inverse(f);
            if (convolve(ProductKind::Free, mul, f, inv) != ones ||
                convolve(ProductKind::Free, mul, inv, f) != ones)
                return result("inverse-random", false,
                              "s=" + std::to_string(s) + " draw " + std::to_string(t));
        }
    }
    return result("inverse-random", true, "f times its inverse is the all-ones series, both sides");
}

// ---------------------------------------------------------------- criterion 7

CheckResult check_moeb_catalan(int nmax) {
    Alphabet a = Alphabet::ones(1);
    Series<Rational> m = moeb_series(a, nmax);
    for (int n = 1; n <= nmax; ++n) {
        Word w{std::vector<int>(n, 1)};
        Rational want(catalan_number(n - 1));
        if (n % 2 == 0) want = -want;
        if (m.coefficient(w) != want)
            return result("moeb-catalan", false,
                          "degree " + std::to_string(n) + ": " + m.coefficient(w).to_string());
    }
    return result("moeb-catalan", true, "signed Catalan coefficients up to degree " +
                                            std::to_string(nmax));
}

CheckResult check_moeb_neutral() {
    for (auto [s, deg] : {std::pair<int, int>{1, 6}, {2, 4}}) {
        Alphabet a = Alphabet::ones(s);
        Series<Rational> z = zeta_series<Rational>(a, deg);
        Series<Rational> m = moeb_series(a, deg);
        Series<Rational> e = boxed_neutral<Rational>(a, deg);
        if (boxed_mul(z, m) != e || boxed_mul(m, z) != e)
            return result("moeb-neutral", false, "s=" + std::to_string(s));
    }
    return result("moeb-neutral", true, "zeta and moeb invert each other on both sides");
}

// ---------------------------------------------------------------- criterion 8

bool law_homogeneous(const Poly& p, const Alphabet& a, int want, bool boxed_weights) {
    auto deg = p.weighted_degree([&](int v) {
        Word u = parse_word(p.ring()->name(v).substr(2));
        return boxed_weights ? u.length() - 1 : degree(a, u);
    });
    return deg && *deg == want;
}

DualGroupSpec graded_spec_weights_1_2() {
    Deformation d;
    d.letter = 2;
    d.terms = {{Word{{1, 1}}, Rational(1, 2)}};
    return DualGroupSpec::graded({d});
}

CheckResult check_law_homogeneity_additive() {
    Alphabet a = Alphabet::ones(2);
    for (ProductKind kind : kAllKinds) {
        LawEngine engine(kind, DualGroupSpec::additive(), a, 4);
        for (const Word& w : enumerate_words(a, 4))
            if (!law_homogeneous(engine.law(w), a, degree(a, w), false))
                return result("law-homogeneity-additive", false,
                              product_kind_name(kind) + " at " + word_to_string(w));
    }
    Alphabet a12(2, {1, 2});
    for (ProductKind kind : kAllKinds) {
        LawEngine engine(kind, graded_spec_weights_1_2(), a12, 4);
        for (const Word& w : enumerate_words(a12, 4))
            if (!law_homogeneous(engine.law(w), a12, degree(a12, w), false))
                return result("law-homogeneity-additive", false,
                              product_kind_name(kind) + " graded at " + word_to_string(w));
    }
    return result("law-homogeneity-additive", true,
                  "additive and deformed-graded laws are degree-homogeneous, all kinds");
}

CheckResult check_law_homogeneity_boxed() {
    for (auto [s, deg] : {std::pair<int, int>{1, 5}, {2, 4}}) {
        Alphabet a = Alphabet::ones(s);
        RingPtr ring = symbolic_law_ring(a, deg);
        Series<Poly> X = symbolic_series(a, deg, "X", ring, false);
        Series<Poly> Y = symbolic_series(a, deg, "Y", ring, false);
        Series<Poly> law = boxed_mul(X, Y);
        for (const Word& w : enumerate_words(a, deg))
            if (!law_homogeneous(law.coefficient(w), a, w.length() - 1, true))
                return result("law-homogeneity-boxed", false,
                              "s=" + std::to_string(s) + " at " + word_to_string(w));
    }
    return result("law-homogeneity-boxed", true,
                  "boxed law is (|w|-1)-homogeneous under weight |u|-1");
}

CheckResult check_dilation_automorphism(unsigned long long seed) {
    Rng rng = seeded(seed, 47);
    Alphabet a = Alphabet::ones(2);
    const Rational lambdas[] = {Rational(2), Rational(-1), Rational(1, 3)};
    auto deg_sigma = [&](const Word& w) { return degree(a, w); };
    auto boxed_sigma = [](const Word& w) { return w.length() - 1; };
    for (const Rational& lam : lambdas) {
        for (ProductKind kind : kAllKinds) {
            DualGroupSpec add = DualGroupSpec::additive();
            Series<Rational> f = random_series(rng, a, 4, false);
            Series<Rational> g = random_series(rng, a, 4, false);
            if (convolve(kind, add, scale(f, lam, deg_sigma), scale(g, lam, deg_sigma)) !=
                scale(convolve(kind, add, f, g), lam, deg_sigma))
                return result("dilation-automorphism", false,
                              product_kind_name(kind) + "/add lambda=" + lam.to_string());
        }
        Series<Rational> f = random_series(rng, a, 4, false, RandomDomain::Normalized);
        Series<Rational> g = random_series(rng, a, 4, false, RandomDomain::Normalized);
        if (boxed_mul(scale(f, lam, boxed_sigma), scale(g, lam, boxed_sigma)) !=
            scale(boxed_mul(f, g), lam, boxed_sigma))
            return result("dilation-automorphism", false, "boxed lambda=" + lam.to_string());
    }
    return result("dilation-automorphism", true,
                  "scaling commutes with the five additive convolutions and the boxed product");
}

// ---------------------------------------------------------------- criterion 9

// Every admitted convolution group at one scale, for the flow-logarithm checks.
std::vector<GroupHandle<Rational>> admitted_groups(int s, int max_deg) {
    std::vector<GroupHandle<Rational>> out;
    Alphabet a = Alphabet::ones(s);
    for (ProductKind kind : kAllKinds)
        out.push_back(make_convolution_group<Rational>(kind, DualGroupSpec::additive(), a, max_deg));
    Alphabet a12(2, {1, 2});
    out.push_back(make_convolution_group<Rational>(ProductKind::Free, graded_spec_weights_1_2(),
                                                   a12, max_deg));
    out.push_back(make_convolution_group<Rational>(ProductKind::Free,
                                                   DualGroupSpec::multiplicative(), a, max_deg));
    out.push_back(make_boxed_group<Rational>(a, max_deg));
    out.push_back(make_shuffle_group(a, max_deg));
    return out;
}

Series<Rational> random_group_element(Rng& rng, const GroupHandle<Rational>& G) {
    RandomDomain dom = RandomDomain::Plain;
    if (G.name == "free-multiplicative" || G.name == "boxed") dom = RandomDomain::Normalized;
    return random_series(rng, G.alphabet, G.max_deg, G.unit.constant_one, dom);
}

CumulantVector<Rational> random_cumulants(Rng& rng, const GroupHandle<Rational>& G) {
    CumulantVector<Rational> xi(G.alphabet, G.max_deg);
    for (const Word& w : enumerate_words(G.alphabet, G.max_deg))
        if (G.sigma(w) >= 1) xi.set(w, random_rational(rng));
    return xi;
}

CheckResult check_logexp_roundtrip(int s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 53);
    for (const GroupHandle<Rational>& G : admitted_groups(s, max_deg)) {
        Series<Rational> f = random_group_element(rng, G);
        if (exp_map(G, log_map(G, f)) != f)
            return result("logexp-roundtrip", false, G.name + ": exp(log f) != f");
        CumulantVector<Rational> xi = random_cumulants(rng, G);
        if (log_map(G, exp_map(G, xi)) != xi)
            return result("logexp-roundtrip", false, G.name + ": log(exp xi) != xi");
    }
    return result("logexp-roundtrip", true, "both directions on every admitted group");
}

CheckResult check_flow_linearity(int s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 59);
    for (const GroupHandle<Rational>& G : admitted_groups(s, max_deg)) {
        Series<Rational> f = random_group_element(rng, G);
        CumulantVector<Rational> base = log_map(G, f);
        for (int n = -2; n <= 3; ++n) {
            CumulantVector<Rational> want = cumulant_scale(base, Rational(n));
            if (log_map(G, group_power(G, f, n)) != want)
                return result("flow-linearity", false, G.name + " at n=" + std::to_string(n));
        }
    }
    return result("flow-linearity", true, "log of the n-th power is n times the log, n in -2..3");
}

CheckResult check_cumulant_additivity(int s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 61);
    Alphabet a = Alphabet::ones(s);
    for (ProductKind kind : {ProductKind::Tensor, ProductKind::Free, ProductKind::Boolean}) {
        GroupHandle<Rational> G =
            make_convolution_group<Rational>(kind, DualGroupSpec::additive(), a, max_deg);
        Series<Rational> f = random_group_element(rng, G);
        Series<Rational> g = random_group_element(rng, G);
        if (log_map(G, G.multiply(f, g)) != cumulant_add(log_map(G, f), log_map(G, g)))
            return result("cumulant-additivity", false, G.name);
    }
    return result("cumulant-additivity", true,
                  "cumulants linearize the tensor, free and boolean additive convolutions");
}

CheckResult check_cumulant_homogeneity(int s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 67);
    const Rational lambdas[] = {Rational(2), Rational(-1), Rational(1, 3)};
    for (const GroupHandle<Rational>& G : admitted_groups(s, max_deg)) {
        if (G.name == "free-multiplicative") continue;
        Series<Rational> f = random_group_element(rng, G);
        CumulantVector<Rational> base = log_map(G, f);
        for (const Rational& lam : lambdas) {
            Series<Rational> scaled = scale(f, lam, G.sigma);
            CumulantVector<Rational> got = log_map(G, scaled);
            CumulantVector<Rational> want(G.alphabet, G.max_deg);
            for (const auto& [w, v] : base.kappa) {
                Rational factor(1);
                for (int i = 0; i < G.sigma(w); ++i) factor *= lam;
                want.set(w, v * factor);
            }
            if (got != want)
                return result("cumulant-homogeneity", false,
                              G.name + " lambda=" + lam.to_string());
        }
    }
    return result("cumulant-homogeneity", true,
                  "log scales by lambda^sigma on the dilation-stable groups");
}

CheckResult check_pyramid(int s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 71);
    for (const GroupHandle<Rational>& G : admitted_groups(s, max_deg)) {
        if (G.name != "free-add" && G.name != "monotone-add" && G.name != "boxed") continue;
        Series<Rational> f = random_group_element(rng, G);
        CumulantVector<Rational> base = log_map(G, f);
        for (const Word& v : enumerate_words(G.alphabet, G.max_deg)) {
            if (G.sigma(v) < 1) continue;
            Series<Rational> pert = f;
            pert.set(v, f.coefficient(v) + Rational(1));
            CumulantVector<Rational> moved = log_map(G, pert);
            for (const Word& w : enumerate_words(G.alphabet, G.max_deg)) {
                if (G.sigma(w) < 1 || G.sigma(v) < G.sigma(w)) continue;
                Rational lhs = moved.get(w) - pert.coefficient(w);
                Rational rhs = base.get(w) - f.coefficient(w);
                if (lhs != rhs)
                    return result("pyramid-shape", false,
                                  G.name + ": perturbing " + word_to_string(v) + " moved " +
                                      word_to_string(w));
            }
        }
    }
    return result("pyramid-shape", true,
                  "log minus identity never reads coordinates of equal or higher level");
}

CheckResult check_free_cumulant_crosscheck(unsigned long long seed) {
    Rng rng = seeded(seed, 73);
    Alphabet a = Alphabet::ones(1);
    const int deg = 4;
    GroupHandle<Rational> G =
        make_convolution_group<Rational>(ProductKind::Free, DualGroupSpec::additive(), a, deg);
    {
        Series<Rational> f = random_series(rng, a, deg, false);
        CumulantVector<Rational> flow = log_map(G, f);
        Series<Rational> rt = r_transform(f);
        for (int n = 1; n <= 2; ++n) {
            Word w{std::vector<int>(n, 1)};
            if (flow.get(w) != rt.coefficient(w))
                return result("free-cumulant-crosscheck", false,
                              "degree " + std::to_string(n) + ": flow " + flow.get(w).to_string() +
                                  " vs boxed " + rt.coefficient(w).to_string());
        }
    }
    // The two cumulant coordinates differ by a linear change with unit
    // diagonal: eta -> log(eta boxed zeta) is additive, homogeneous, zero at
    // zero, and moves each coordinate by exactly its own perturbation.
    auto T = [&](const Series<Rational>& eta) {
        return log_map(G, r_transform_inverse(eta));
    };
    Series<Rational> zero = series_zero<Rational>(a, deg, false);
    if (T(zero) != CumulantVector<Rational>(a, deg))
        return result("free-cumulant-crosscheck", false, "map at zero is not zero");
    Series<Rational> eta = random_series(rng, a, deg, false);
    Series<Rational> eta2 = random_series(rng, a, deg, false);
    if (T(series_add(eta, eta2)) != cumulant_add(T(eta), T(eta2)))
        return result("free-cumulant-crosscheck", false, "map is not additive");
    Rational c(3, 2);
    if (T(series_scalar_mul(eta, c)) != cumulant_scale(T(eta), c))
        return result("free-cumulant-crosscheck", false, "map is not homogeneous");
    CumulantVector<Rational> base = T(eta);
    for (const Word& v : enumerate_words(a, deg)) {
        Series<Rational> pert = eta;
        pert.set(v, eta.coefficient(v) + Rational(1));
        CumulantVector<Rational> moved = T(pert);
        for (const Word& w : enumerate_words(a, deg)) {
            if (degree(a, v) < degree(a, w)) continue;
            Rational want = base.get(w) + (v == w ? Rational(1) : Rational());
            if (moved.get(w) != want)
                return result("free-cumulant-crosscheck", false,
                              "diagonal: perturbing " + word_to_string(v) + " at " +
                                  word_to_string(w));
        }
    }
    return result("free-cumulant-crosscheck", true,
                  "flow log matches boxed cumulants at degrees 1-2 and differs by a "
                  "unit-diagonal triangular linear map");
}

CheckResult check_free_cumulant_additivity(int s, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 79);
    for (int si = 1; si <= s; ++si) {
        Alphabet a = Alphabet::ones(si);
        Series<Rational> f = random_series(rng, a, max_deg, false);
        Series<Rational> g = random_series(rng, a, max_deg, false);
        Series<Rational> conv = convolve(ProductKind::Free, DualGroupSpec::additive(), f, g);
        if (r_transform(conv) != series_add(r_transform(f), r_transform(g)))
            return result("free-cumulant-additivity", false, "s=" + std::to_string(si));
    }
    return result("free-cumulant-additivity", true,
                  "boxed cumulants add across the free additive convolution");
}

// --------------------------------------------------------------- criterion 10

CheckResult check_rtransform_differential() {
    for (int s = 1; s <= 2; ++s)
        if (!r_transform_differential_identity(Alphabet::ones(s), 3))
            return result("rtransform-differential", false, "s=" + std::to_string(s));
    return result("rtransform-differential", true,
                  "first-order part at the origin is the identity, s <= 2, degree <= 3");
}

// --------------------------------------------------------------- criterion 11

CheckResult check_shuffle_oracle(int count, int max_deg, unsigned long long seed) {
    Rng rng = seeded(seed, 83);
    Alphabet a = Alphabet::ones(2);
    GroupHandle<Rational> G = make_shuffle_group(a, max_deg);
    std::vector<Word> words = enumerate_words(a, max_deg);
    auto letter_infinitesimal = [&]() {
        Series<Rational> xi(a, max_deg, false);
        for (int x = 1; x <= a.s; ++x) xi.set(Word{{x}}, random_rational(rng));
        return xi;
    };
    for (int t = 0; t < count; ++t) {
        Series<Rational> ch = char_convolve(hopf_exp(letter_infinitesimal()),
                                            hopf_exp(letter_infinitesimal()));
        if (t % 2 == 1) ch = char_convolve(ch, hopf_exp(letter_infinitesimal()));
        if (!is_character(ch))
            return result("shuffle-oracle", false, "draw " + std::to_string(t) + " not a character");
        Series<Rational> hopf = hopf_log(ch);
        CumulantVector<Rational> flow = log_map(G, ch);
        for (const Word& w : words)
            if (flow.get(w) != hopf.coefficient(w))
                return result("shuffle-oracle", false,
                              "character " + std::to_string(t) + " at " + word_to_string(w));
        for (const Word& u : words)
            for (const Word& v : words) {
                if (degree(a, u) + degree(a, v) > max_deg) continue;
                if (eval_shuffle(hopf, shuffle_mul(u, v)) != Rational())
                    return result("shuffle-oracle", false,
                                  "log not infinitesimal on " + word_to_string(u) + " | " +
                                      word_to_string(v));
            }
        if (hopf_exp(hopf) != ch)
            return result("shuffle-oracle", false, "exp(log) round-trip failed");
    }
    for (int t = 0; t < 3; ++t) {
        Series<Rational> f = random_series(rng, a, max_deg, true);
        Series<Rational> hopf = hopf_log(f);
        CumulantVector<Rational> flow = log_map(G, f);
        for (const Word& w : words)
            if (flow.get(w) != hopf.coefficient(w))
                return result("shuffle-oracle", false,
                              "unital functional " + std::to_string(t) + " at " + word_to_string(w));
    }
    return result("shuffle-oracle", true,
                  "interpolation log equals the convolution-series log on " +
                      plural(count, "character") + " and 3 plain unital functionals");
}

// ------------------------------------------------------- boxed group algebra

CheckResult check_boxed_group(unsigned long long seed) {
    Rng rng = seeded(seed, 89);
    for (int s = 1; s <= 2; ++s) {
        Alphabet a = Alphabet::ones(s);
        const int deg = 5;
        Series<Rational> f = random_series(rng, a, deg, false);
        Series<Rational> g = random_series(rng, a, deg, false);
        Series<Rational> h = random_series(rng, a, deg, false);
        if (boxed_mul(boxed_mul(f, g), h) != boxed_mul(f, boxed_mul(g, h)))
            return result("boxed-group", false, "associativity s=" + std::to_string(s));
        Series<Rational> e = boxed_neutral<Rational>(a, deg);
        if (boxed_mul(f, e) != f || boxed_mul(e, f) != f)
            return result("boxed-group", false, "neutral s=" + std::to_string(s));
    }
    return result("boxed-group", true, "associative with two-sided neutral, s <= 2, degree 5");
}

std::string failures_of(const std::vector<CheckResult>& checks) {
    std::string out;
    for (const CheckResult& c : checks)
        if (!c.pass) out += (out.empty() ? "" : "; ") + c.check + ": " + c.detail;
    return out;
}

CriterionResult criterion(int index, const std::string& name, std::vector<CheckResult> checks,
                          const std::string& pass_detail) {
    bool pass = true;
    for (const CheckResult& c : checks) pass = pass && c.pass;
    return CriterionResult{index, name, pass, pass ? pass_detail : failures_of(checks)};
}

} // namespace

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts) {
    const int s = opts.s;
    const int deg = opts.max_deg;
    const unsigned long long seed = opts.seed;
    std::vector<CheckResult> out;
    out.push_back(check_nc_catalan(8));
    out.push_back(check_kreweras_blocks(8));
    out.push_back(check_kreweras_bijection(8));
    out.push_back(check_free_expansion_5());
    out.push_back(check_free_expansion_6());
    out.push_back(check_product_marginal(s, deg, seed));
    out.push_back(check_product_associativity(s, deg, seed));
    out.push_back(check_product_units(s, deg, seed));
    out.push_back(check_product_commutativity(s, deg, seed));
    out.push_back(check_product_noncommutativity(seed));
    out.push_back(check_eval_commutativity(seed));
    out.push_back(check_free_memo_oracle(seed));
    out.push_back(check_free_symbolic_homogeneity());
    out.push_back(check_bridge(10, std::min(deg, 4), seed));
    out.push_back(check_decomposition(1, 5));
    out.push_back(check_decomposition(2, 5));
    out.push_back(check_inverse_symbolic());
    out.push_back(check_inverse_random(std::min(deg, 4), seed));
    out.push_back(check_moeb_catalan(6));
    out.push_back(check_moeb_neutral());
    out.push_back(check_law_homogeneity_additive());
    out.push_back(check_law_homogeneity_boxed());
    out.push_back(check_dilation_automorphism(seed));
    out.push_back(check_logexp_roundtrip(s, std::min(deg, 4), seed));
    out.push_back(check_flow_linearity(s, std::min(deg, 4), seed));
    out.push_back(check_cumulant_additivity(s, std::min(deg, 4), seed));
    out.push_back(check_cumulant_homogeneity(s, std::min(deg, 4), seed));
    out.push_back(check_pyramid(s, std::min(deg, 4), seed));
    out.push_back(check_free_cumulant_crosscheck(seed));
    out.push_back(check_free_cumulant_additivity(s, std::min(deg, 4), seed));
    out.push_back(check_rtransform_differential());
    out.push_back(check_shuffle_oracle(10, std::min(deg, 4), seed));
    out.push_back(check_boxed_group(seed));
    std::sort(out.begin(), out.end(),
              [](const CheckResult& x, const CheckResult& y) { return x.check < y.check; });
    return out;
}

std::vector<CriterionResult> run_acceptance() {
    const unsigned long long seed = 7;
    std::vector<CriterionResult> out;
    out.push_back(criterion(1, "non-crossing combinatorics",
                            {check_nc_catalan(8), check_kreweras_blocks(8),
                             check_kreweras_bijection(8)},
                            "Catalan counts, block identity and bijectivity for n <= 8"));
    out.push_back(criterion(2, "free-product expansions",
                            {check_free_expansion_5(), check_free_expansion_6()},
                            "both displayed expansions reproduced term for term"));
    out.push_back(criterion(3, "monoid and group laws",
                            {check_product_associativity(1, 4, seed),
                             check_product_associativity(2, 4, seed),
                             check_product_units(1, 4, seed), check_product_units(2, 4, seed),
                             check_product_commutativity(2, 4, seed),
                             check_product_noncommutativity(seed)},
                            "associativity, units and (non)commutativity across 5 kinds x 2 "
                            "flavors"));
    out.push_back(criterion(4, "bridge identity", {check_bridge(10, 4, seed)},
                            "20 seeded pairs agree across independent pipelines"));
    out.push_back(criterion(5, "canonical decomposition",
                            {check_decomposition(1, 5), check_decomposition(2, 5)},
                            "pure and alternating coefficients exact for all words, |w| <= 5, "
                            "s <= 2"));
    out.push_back(criterion(6, "free multiplicative inverse",
                            {check_inverse_symbolic(), check_inverse_random(4, seed)},
                            "displayed formulas and two-sided random inverses exact"));
    out.push_back(criterion(7, "moebius series",
                            {check_moeb_catalan(6), check_moeb_neutral()},
                            "signed Catalan values and two-sided neutrality"));
    out.push_back(criterion(8, "homogeneity",
                            {check_law_homogeneity_additive(), check_law_homogeneity_boxed(),
                             check_dilation_automorphism(seed)},
                            "graded laws and dilation automorphisms exact"));
    out.push_back(criterion(9, "logarithm and exponential",
                            {check_logexp_roundtrip(2, 4, seed), check_flow_linearity(2, 4, seed),
                             check_cumulant_additivity(2, 4, seed),
                             check_cumulant_homogeneity(2, 4, seed), check_pyramid(2, 4, seed),
                             check_free_cumulant_crosscheck(seed),
                             check_free_cumulant_additivity(2, 4, seed)},
                            "round-trips, flow linearity, additivity, homogeneity, pyramid "
                            "shape and the cumulant cross-check"));
    out.push_back(criterion(10, "first-order behavior at the origin",
                            {check_rtransform_differential()},
                            "identity linear part in the truncated perturbation ring"));
    out.push_back(criterion(11, "shuffle oracle", {check_shuffle_oracle(10, 4, seed)},
                            "interpolation log equals the Hopf convolution log"));
    return out;
}

} // namespace ncprob
