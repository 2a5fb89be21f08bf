#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncprob/ncpart.hpp"
#include "ncprob/series.hpp"
#include "ncprob/uniprod.hpp"
#include "ncprob/words.hpp"

namespace ncprob {

enum class Flavor { Additive, Multiplicative, Graded };

inline std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Additive: return "add";
        case Flavor::Multiplicative: return "mul";
        case Flavor::Graded: return "graded";
    }
    return "?";
}

// Graded splitting deformation: letter i picks up alpha * (every mixed
// two-leg expansion of u) for each listed (u, alpha); deg(u) must equal the
// letter weight so the splitting stays degree-homogeneous.  All coefficients
// zero reproduces the plain additive splitting.
struct Deformation {
    int letter = 0;
    std::vector<std::pair<Word, Rational>> terms;
};

struct DualGroupSpec {
    Flavor flavor = Flavor::Additive;
    std::vector<Deformation> deformations; // graded flavor only

    static DualGroupSpec additive() { return {Flavor::Additive, {}}; }
    static DualGroupSpec multiplicative() { return {Flavor::Multiplicative, {}}; }
    static DualGroupSpec graded(std::vector<Deformation> defs) {
        return {Flavor::Graded, std::move(defs)};
    }
};

struct ExpansionTerm {
    FreeMonomial mono;
    Rational coeff;
};

namespace detail {

// Monomial for a word under a two-leg assignment, adjacent equal legs merged.
inline FreeMonomial leg_assignment(const Word& w, unsigned mask) {
    std::vector<Block> raw;
    raw.reserve(w.letters.size());
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        int leg = (mask >> i) & 1u ? 2 : 1;
        raw.push_back(Block{leg, Word{{w.letters[i]}}});
    }
    return contract_blocks(raw);
}

// Images of one generator under the splitting of the given flavor.
inline std::vector<ExpansionTerm> generator_image(const DualGroupSpec& spec, const Alphabet& a,
                                                  int letter) {
    std::vector<ExpansionTerm> out;
    Word x{{letter}};
    switch (spec.flavor) {
        case Flavor::Multiplicative:
            out.push_back({make_monomial({Block{1, x}, Block{2, x}}), Rational(1)});
            return out;
        case Flavor::Additive:
        case Flavor::Graded:
            out.push_back({make_monomial({Block{1, x}}), Rational(1)});
            out.push_back({make_monomial({Block{2, x}}), Rational(1)});
            break;
    }
    if (spec.flavor == Flavor::Graded) {
        for (const Deformation& d : spec.deformations) {
            if (d.letter != letter) continue;
            for (const auto& [u, alpha] : d.terms) {
                if (alpha.is_zero()) continue;
                if (u.length() < 2)
                    throw value_error("coproduct: deformation word has no mixed expansion");
                if (degree(a, u) != a.weights[letter - 1])
                    throw value_error("coproduct: deformation degree != letter weight");
                unsigned full = (1u << u.length()) - 1u;
                for (unsigned mask = 1; mask < full; ++mask) // both legs used
                    out.push_back({leg_assignment(u, mask), alpha});
            }
        }
    }
    return out;
}

} // namespace detail

// Expansion of the coproduct of w as a sum of free-product monomials.
inline std::vector<ExpansionTerm> coproduct(const DualGroupSpec& spec, const Alphabet& a,
                                            const Word& w) {
    if (w.empty()) throw value_error("coproduct: empty word");
    check_word(a, w);
    const int m = w.length();
    if (spec.flavor == Flavor::Additive) {
        std::vector<ExpansionTerm> out;
        out.reserve(1u << m);
        for (unsigned mask = 0; mask < (1u << m); ++mask)
            out.push_back({detail::leg_assignment(w, mask), Rational(1)});
        return out;
    }
    if (spec.flavor == Flavor::Multiplicative) {
        std::vector<Block> raw;
        for (int x : w.letters) {
            raw.push_back(Block{1, Word{{x}}});
            raw.push_back(Block{2, Word{{x}}});
        }
        return {{make_monomial(raw), Rational(1)}};
    }
    // Graded: multiply out the generator images, collecting like monomials.
    std::map<FreeMonomial, Rational> acc;
    std::vector<ExpansionTerm> partial{{FreeMonomial{}, Rational(1)}};
    for (int x : w.letters) {
        std::vector<ExpansionTerm> next;
        for (const ExpansionTerm& t : partial)
            for (const ExpansionTerm& img : detail::generator_image(spec, a, x))
                next.push_back({monomial_mul(t.mono, img.mono), t.coeff * img.coeff});
        partial = std::move(next);
    }
    for (ExpansionTerm& t : partial) {
        auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff);
        if (!fresh) it->second += t.coeff;
    }
    std::vector<ExpansionTerm> out;
    for (auto& [mono, c] : acc)
        if (!c.is_zero()) out.push_back({mono, c});
    return out;
}

// Labelled convolution f *_{kind,flavor} g = (f x g) o coproduct, computed on
// every word of the truncation.
template <class R>
Series<R> convolve(ProductKind kind, const DualGroupSpec& spec, const Series<R>& f,
                   const Series<R>& g) {
    if (!f.compatible(g)) {
        auto [fa, ga] = align_truncation(f, g);
        return convolve(kind, spec, fa, ga);
    }
    bool want_one = spec.flavor == Flavor::Multiplicative;
    if (f.constant_one != want_one || g.constant_one != want_one)
        throw value_error("convolve: series variant does not match flavor");
    Series<R> out(f.alphabet, f.max_deg, want_one, RingOps<R>::zero(f.proto));
    ProductEvaluator<R> ev(kind, f, g);
    for (const Word& w : enumerate_words(f.alphabet, f.max_deg)) {
        R total = RingOps<R>::zero(f.proto);
        for (const ExpansionTerm& t : coproduct(spec, f.alphabet, w))
            total = total + ev.eval(t.mono) * RingOps<R>::from_rational(f.proto, t.coeff);
        out.set(w, total);
    }
    return out;
}

// Symbolic group law F_w(X, Y): the convolution coefficient at w with fully
// symbolic series X, Y.  One engine reuses the evaluator across many words.
class LawEngine {
public:
    LawEngine(ProductKind kind, DualGroupSpec spec, const Alphabet& a, int max_deg,
              bool multiplicative_domain = false)
        : spec_(std::move(spec)),
          alphabet_(a),
          ring_(symbolic_law_ring(a, max_deg)),
          X_(symbolic_series(a, max_deg, "X", ring_, multiplicative_domain)),
          Y_(symbolic_series(a, max_deg, "Y", ring_, multiplicative_domain)),
          ev_(kind, X_, Y_) {}

    const RingPtr& ring() const { return ring_; }

    Poly law(const Word& w) {
        Poly total = Poly::zero(ring_);
        for (const ExpansionTerm& t : coproduct(spec_, alphabet_, w))
            total += ev_.eval(t.mono) * t.coeff;
        return total;
    }

private:
    DualGroupSpec spec_;
    Alphabet alphabet_;
    RingPtr ring_;
    Series<Poly> X_, Y_;
    ProductEvaluator<Poly> ev_;
};

inline Poly group_law(ProductKind kind, const DualGroupSpec& spec, const Alphabet& a,
                      const Word& w) {
    check_word(a, w);
    return LawEngine(kind, spec, a, degree(a, w)).law(w);
}

// Inverse for the free multiplicative convolution, solved degree by degree:
// the unit is the all-ones series, and the coefficient of g_w in (f * g)_w is
// the product of the single-letter coefficients of f.
template <class R>
Series<R> boxtimesV_inverse(const Series<R>& f) {
    if (!f.constant_one) throw value_error("inverse: multiplicative series required");
    if (!in_group(f, GroupVariant::Invertible))
        throw value_error("inverse: single-letter coefficients must be invertible");
    DualGroupSpec spec = DualGroupSpec::multiplicative();
    Series<R> g(f.alphabet, f.max_deg, true, RingOps<R>::zero(f.proto));
    R one = RingOps<R>::one(f.proto);
    std::vector<Word> words = enumerate_words(f.alphabet, f.max_deg);
    std::size_t i = 0;
    while (i < words.size()) {
        int d = degree(f.alphabet, words[i]);
        std::size_t j = i;
        while (j < words.size() && degree(f.alphabet, words[j]) == d) ++j;
        // One evaluator per degree level: lower coefficients of g are final,
        // same-level targets are only read at their own word (still zero).
        ProductEvaluator<R> ev(ProductKind::Free, f, g);
        std::vector<std::pair<Word, R>> solved;
        for (std::size_t k = i; k < j; ++k) {
            const Word& w = words[k];
            R t = RingOps<R>::zero(f.proto);
            for (const ExpansionTerm& term : coproduct(spec, f.alphabet, w))
                t = t + ev.eval(term.mono) * RingOps<R>::from_rational(f.proto, term.coeff);
            R letters = one;
            for (int x : w.letters) letters = letters * f.coefficient(Word{{x}});
            solved.emplace_back(w, (one - t) * RingOps<R>::invert(letters));
        }
        for (auto& [w, v] : solved) g.set(w, std::move(v));
        i = j;
    }
    return g;
}

// Coefficients of the three canonical terms of the free multiplicative group
// law at w: the two pure terms and the alternating Catalan term.
struct DecompositionReport {
    Word word;
    Rational pure_x;       // coefficient of X_w * prod Y_{letters}
    Rational pure_y;       // coefficient of prod X_{letters} * Y_w
    Rational catalan_term; // coefficient of prod X_{letters} * prod Y_{letters}
    bool pure_ok = false;
    bool catalan_ok = false;
    std::string mixed; // every other monomial, for inspection
};

DecompositionReport verify_decomposition(const Alphabet& a, const Word& w, LawEngine& engine);

inline DecompositionReport verify_decomposition(const Alphabet& a, const Word& w) {
    LawEngine engine(ProductKind::Free, DualGroupSpec::multiplicative(), a, degree(a, w), true);
    return verify_decomposition(a, w, engine);
}

} // namespace ncprob
