#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "ncprob/error.hpp"
#include "ncprob/poly.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/words.hpp"

namespace ncprob {

// Shared commutative-ring surface for coefficient types.  The proto argument
// carries the ring context (a zero value); Rational ignores it, Poly needs it.
template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero(const Rational&) { return Rational(); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational from_rational(const Rational&, const Rational& q) { return q; }
    static bool is_unit(const Rational& a) { return !a.is_zero(); }
    static Rational invert(const Rational& a) { return a.inverse(); }
    static std::string to_string(const Rational& a) { return a.to_string(); }
};

template <>
struct RingOps<Poly> {
    static Poly zero(const Poly& proto) { return Poly::zero(proto.ring()); }
    static Poly one(const Poly& proto) { return Poly::one(proto.ring()); }
    static Poly from_rational(const Poly& proto, const Rational& q) {
        return Poly::constant(proto.ring(), q);
    }
    static bool is_unit(const Poly& a) { return a.is_unit(); }
    static Poly invert(const Poly& a) { return a.inverse(); }
    static std::string to_string(const Poly& a) { return a.to_string(); }
};

// Truncated moment series: coefficients on nonempty words of weighted degree
// <= max_deg, plus a fixed constant term 0 (additive variant) or 1
// (multiplicative variant).  Absent coefficients read as ring zero.
template <class R>
struct Series {
    Alphabet alphabet;
    int max_deg = 0;
    bool constant_one = false;
    std::map<Word, R> coeffs;
    R proto{}; // ring zero, carries the ring context for Poly

    Series() = default;
    Series(Alphabet a, int deg, bool const_one, R proto_zero = R{})
        : alphabet(std::move(a)), max_deg(deg), constant_one(const_one), proto(std::move(proto_zero)) {
        if (deg < 1) throw value_error("series: max_deg must be >= 1");
    }

    R coefficient(const Word& w) const {
        if (w.empty())
            return constant_one ? RingOps<R>::one(proto) : RingOps<R>::zero(proto);
        if (degree(alphabet, w) > max_deg)
            throw truncation_error("series: word beyond truncation degree");
        auto it = coeffs.find(w);
        return it == coeffs.end() ? RingOps<R>::zero(proto) : it->second;
    }

    void set(const Word& w, R value) {
        if (w.empty()) throw value_error("series: constant term is fixed by the variant");
        if (degree(alphabet, w) > max_deg)
            throw truncation_error("series: word beyond truncation degree");
        auto it = coeffs.find(w);
        if (it != coeffs.end()) {
            if (value == RingOps<R>::zero(proto)) coeffs.erase(it);
            else it->second = std::move(value);
        } else if (!(value == RingOps<R>::zero(proto))) {
            coeffs.emplace(w, std::move(value));
        }
    }

    bool compatible(const Series& o) const {
        return alphabet == o.alphabet && max_deg == o.max_deg;
    }

    bool operator==(const Series& o) const {
        return alphabet == o.alphabet && max_deg == o.max_deg &&
               constant_one == o.constant_one && coeffs == o.coeffs;
    }
    bool operator!=(const Series& o) const { return !(*this == o); }
};

template <class R>
Series<R> series_zero(const Alphabet& a, int max_deg, bool const_one, const R& proto = R{}) {
    return Series<R>(a, max_deg, const_one, RingOps<R>::zero(proto));
}

// The all-ones series 1̅: every coefficient 1, constant 1.  Unit of the
// multiplicative convolutions (where one exists).
template <class R>
Series<R> series_all_ones(const Alphabet& a, int max_deg, const R& proto = R{}) {
    Series<R> f(a, max_deg, true, RingOps<R>::zero(proto));
    for (const Word& w : enumerate_words(a, max_deg)) f.set(w, RingOps<R>::one(f.proto));
    return f;
}

template <class R>
Series<R> with_constant_flag(const Series<R>& f, bool const_one) {
    Series<R> out = f;
    out.constant_one = const_one;
    return out;
}

// Exact graded truncation: drop coefficients above new_deg.
template <class R>
Series<R> truncate_series(const Series<R>& f, int new_deg) {
    if (new_deg >= f.max_deg) return f;
    Series<R> out(f.alphabet, new_deg, f.constant_one, RingOps<R>::zero(f.proto));
    for (const auto& [w, c] : f.coeffs)
        if (degree(f.alphabet, w) <= new_deg) out.set(w, c);
    return out;
}

// Binary operations on series of unequal truncation degree align to the
// minimum (identities are graded, so the restriction is exact).
template <class R>
std::pair<Series<R>, Series<R>> align_truncation(const Series<R>& f, const Series<R>& g) {
    if (!(f.alphabet == g.alphabet)) throw value_error("series: alphabet mismatch");
    int m = f.max_deg < g.max_deg ? f.max_deg : g.max_deg;
    return {truncate_series(f, m), truncate_series(g, m)};
}

// Pointwise sum of coefficient data (constants are variant-fixed, not added).
template <class R>
Series<R> series_add(const Series<R>& f, const Series<R>& g) {
    if (!f.compatible(g)) {
        auto [fa, ga] = align_truncation(f, g);
        return series_add(fa, ga);
    }
    Series<R> out = f;
    for (const auto& [w, c] : g.coeffs) out.set(w, out.coefficient(w) + c);
    return out;
}

template <class R>
Series<R> series_scalar_mul(const Series<R>& f, const R& c) {
    Series<R> out(f.alphabet, f.max_deg, f.constant_one, RingOps<R>::zero(f.proto));
    for (const auto& [w, v] : f.coeffs) out.set(w, v * c);
    return out;
}

// Dilation delta_lambda: coefficient at w scaled by lambda^{sigma(w)} for a
// weight profile sigma (weighted degree for the additive groups, |w|-1 for
// the boxed ones).
template <class R, class SigmaFn>
Series<R> scale(const Series<R>& f, const R& lambda, SigmaFn&& sigma) {
    Series<R> out(f.alphabet, f.max_deg, f.constant_one, RingOps<R>::zero(f.proto));
    for (const auto& [w, v] : f.coeffs) {
        int e = sigma(w);
        if (e < 0) throw value_error("scale: negative weight");
        R factor = RingOps<R>::one(f.proto);
        for (int i = 0; i < e; ++i) factor = factor * lambda;
        out.set(w, v * factor);
    }
    return out;
}

// Membership in the group G^s (single-letter coefficients invertible) or its
// normalized subgroup G^s_+ (single-letter coefficients equal to one).
enum class GroupVariant { Invertible, Normalized };

template <class R>
bool in_group(const Series<R>& f, GroupVariant variant) {
    for (int x = 1; x <= f.alphabet.s; ++x) {
        R c = f.coefficient(Word{{x}});
        if (variant == GroupVariant::Invertible) {
            if (!RingOps<R>::is_unit(c)) return false;
        } else {
            if (!(c == RingOps<R>::one(f.proto))) return false;
        }
    }
    return true;
}

template <class R>
std::string series_to_string(const Series<R>& f) {
    std::string out = "{constant " + std::string(f.constant_one ? "1" : "0");
    for (const auto& [w, c] : f.coeffs)
        out += "; " + word_to_string(w) + ": " + RingOps<R>::to_string(c);
    return out + "}";
}

} // namespace ncprob
