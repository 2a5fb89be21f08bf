#pragma once

#include <string>

#include "ncprob/dualconv.hpp"
#include "ncprob/ncpart.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

// Convolution over non-crossing partitions: the coefficient at w is the sum
// over pi in NC(|w|) of (prod over blocks V of pi of f at w|V) times the same
// for g over the Kreweras complement of pi.
template <class R>
Series<R> boxed_mul(const Series<R>& f, const Series<R>& g) {
    if (!f.compatible(g)) {
        auto [fa, ga] = align_truncation(f, g);
        return boxed_mul(fa, ga);
    }
    Series<R> out(f.alphabet, f.max_deg, f.constant_one, RingOps<R>::zero(f.proto));
    for (const Word& w : enumerate_words(f.alphabet, f.max_deg)) {
        R total = RingOps<R>::zero(f.proto);
        for (const NCPartition& pi : enumerate_nc(w.length())) {
            R term = RingOps<R>::one(f.proto);
            for (const auto& block : pi.blocks) term = term * f.coefficient(restrict_word(w, block));
            for (const auto& block : kreweras(pi).blocks)
                term = term * g.coefficient(restrict_word(w, block));
            total = total + term;
        }
        out.set(w, total);
    }
    return out;
}

// Neutral element: single-letter coefficients one, all longer words zero.
template <class R>
Series<R> boxed_neutral(const Alphabet& a, int max_deg, const R& proto = R{}) {
    Series<R> e(a, max_deg, false, RingOps<R>::zero(proto));
    for (int x = 1; x <= a.s; ++x) e.set(Word{{x}}, RingOps<R>::one(e.proto));
    return e;
}

// Zeta: every coefficient one (constant-zero variant).
template <class R>
Series<R> zeta_series(const Alphabet& a, int max_deg, const R& proto = R{}) {
    Series<R> z(a, max_deg, false, RingOps<R>::zero(proto));
    for (const Word& w : enumerate_words(a, max_deg)) z.set(w, RingOps<R>::one(z.proto));
    return z;
}

// Moebius series: the two-sided boxed inverse of zeta, solved degree by
// degree; as pi runs over NC(n) so does its Kreweras complement, so
// (zeta x m)_w = sum over sigma in NC(|w|) of prod over blocks of m.
inline Series<Rational> moeb_series(const Alphabet& a, int max_deg) {
    Series<Rational> m(a, max_deg, false);
    for (const Word& w : enumerate_words(a, max_deg)) {
        Rational acc;
        for (const NCPartition& sigma : enumerate_nc(w.length())) {
            if (sigma.block_count() == 1) continue; // the target coefficient itself
            Rational term(1);
            for (const auto& block : sigma.blocks)
                term *= m.coefficient(restrict_word(w, block));
            acc += term;
        }
        Rational neutral = w.length() == 1 ? Rational(1) : Rational(0);
        m.set(w, neutral - acc);
    }
    return m;
}

template <class R>
Series<R> lift_series(const Series<Rational>& f, const R& proto) {
    Series<R> out(f.alphabet, f.max_deg, f.constant_one, RingOps<R>::zero(proto));
    for (const auto& [w, c] : f.coeffs) out.set(w, RingOps<R>::from_rational(out.proto, c));
    return out;
}

// Moment-to-free-cumulant map: right boxed translation by the Moebius series.
template <class R>
Series<R> r_transform(const Series<R>& f) {
    return boxed_mul(f, lift_series(moeb_series(f.alphabet, f.max_deg), f.proto));
}

// Inverse direction: right boxed translation by zeta.
template <class R>
Series<R> r_transform_inverse(const Series<R>& k) {
    return boxed_mul(k, zeta_series(k.alphabet, k.max_deg, k.proto));
}

struct BridgeReport {
    bool equal = false;
    std::string detail;
};

// The free multiplicative convolution computed through two independent
// pipelines: the coproduct contraction on one side, the boxed translation
// f (boxed) moeb (boxed) g on the other.
template <class R>
BridgeReport verify_bridge(const Series<R>& f, const Series<R>& g) {
    Series<R> lhs = convolve(ProductKind::Free, DualGroupSpec::multiplicative(), f, g);
    Series<R> moeb = lift_series(moeb_series(f.alphabet, f.max_deg), f.proto);
    Series<R> rhs = boxed_mul(boxed_mul(f, moeb), g);
    BridgeReport rep;
    rep.equal = true;
    for (const Word& w : enumerate_words(f.alphabet, f.max_deg)) {
        if (lhs.coefficient(w) == rhs.coefficient(w)) continue;
        rep.equal = false;
        rep.detail += (rep.detail.empty() ? "" : "; ") + word_to_string(w) + ": " +
                      RingOps<R>::to_string(lhs.coefficient(w)) + " vs " +
                      RingOps<R>::to_string(rhs.coefficient(w));
    }
    if (rep.equal) rep.detail = "pipelines agree";
    return rep;
}

} // namespace ncprob
