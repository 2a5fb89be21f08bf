#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ncprob/boxed.hpp"
#include "ncprob/dualconv.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

// Cumulant coordinates: one ring element per word of the truncation.
template <class R>
struct CumulantVector {
    Alphabet alphabet;
    int max_deg = 0;
    std::map<Word, R> kappa;
    R proto{};

    CumulantVector() = default;
    CumulantVector(Alphabet a, int deg, R proto_zero = R{})
        : alphabet(std::move(a)), max_deg(deg), proto(std::move(proto_zero)) {}

    R get(const Word& w) const {
        auto it = kappa.find(w);
        return it == kappa.end() ? RingOps<R>::zero(proto) : it->second;
    }
    void set(const Word& w, R v) {
        if (v == RingOps<R>::zero(proto)) kappa.erase(w);
        else kappa.insert_or_assign(w, std::move(v));
    }

    bool operator==(const CumulantVector& o) const {
        return alphabet == o.alphabet && max_deg == o.max_deg && kappa == o.kappa;
    }
    bool operator!=(const CumulantVector& o) const { return !(*this == o); }
};

template <class R>
CumulantVector<R> cumulant_add(const CumulantVector<R>& a, const CumulantVector<R>& b) {
    CumulantVector<R> out = a;
    for (const auto& [w, v] : b.kappa) out.set(w, out.get(w) + v);
    return out;
}

template <class R>
CumulantVector<R> cumulant_scale(const CumulantVector<R>& a, const R& c) {
    CumulantVector<R> out(a.alphabet, a.max_deg, a.proto);
    for (const auto& [w, v] : a.kappa) out.set(w, v * c);
    return out;
}

// A convolution group the one-parameter-flow logarithm applies to: an
// associative multiplication with two-sided unit whose n-th power has
// coefficients polynomial in n of degree bounded by the weight profile sigma.
template <class R>
struct GroupHandle {
    std::string name;
    Alphabet alphabet;
    int max_deg = 0;
    Series<R> unit;
    std::function<Series<R>(const Series<R>&, const Series<R>&)> multiply;
    std::function<int(const Word&)> sigma;
    std::function<void(const Series<R>&)> check_domain;
};

// Handle for a labelled convolution group.  Multiplicative flavors are mostly
// rejected: Monotone/AntiMonotone have one-sided units, Boolean has none, and
// the Tensor flow (f^n)_w = f_w^n is not polynomial in n; the unipotent
// multiplicative group is the Free one on normalized series (sigma = |w|-1).
template <class R>
GroupHandle<R> make_convolution_group(ProductKind kind, const DualGroupSpec& spec,
                                      const Alphabet& a, int max_deg, const R& proto = R{}) {
    GroupHandle<R> G;
    G.alphabet = a;
    G.max_deg = max_deg;
    if (spec.flavor == Flavor::Multiplicative) {
        switch (kind) {
            case ProductKind::Tensor:
                throw value_error("group: tensor multiplicative flow is not polynomial");
            case ProductKind::Boolean:
                throw value_error("group: boolean multiplicative convolution has no unit");
            case ProductKind::Monotone:
            case ProductKind::AntiMonotone:
                throw value_error("group: one-sided unit only; not a group");
            case ProductKind::Free:
                break;
        }
        G.name = "free-multiplicative";
        G.unit = series_all_ones(a, max_deg, proto);
        G.sigma = [a](const Word& w) { return w.length() - 1; };
        G.check_domain = [](const Series<R>& f) {
            if (!f.constant_one) throw value_error("group: multiplicative series required");
            if (!in_group(f, GroupVariant::Normalized))
                throw value_error("group: single-letter coefficients must be one");
        };
    } else {
        G.name = product_kind_name(kind) + "-" + flavor_name(spec.flavor);
        G.unit = series_zero(a, max_deg, false, proto);
        G.sigma = [a](const Word& w) { return degree(a, w); };
        G.check_domain = [](const Series<R>& f) {
            if (f.constant_one) throw value_error("group: additive series required");
        };
    }
    G.multiply = [kind, spec](const Series<R>& x, const Series<R>& y) {
        return convolve(kind, spec, x, y);
    };
    return G;
}

template <class R>
GroupHandle<R> make_boxed_group(const Alphabet& a, int max_deg, const R& proto = R{}) {
    GroupHandle<R> G;
    G.name = "boxed";
    G.alphabet = a;
    G.max_deg = max_deg;
    G.unit = boxed_neutral(a, max_deg, proto);
    G.multiply = [](const Series<R>& x, const Series<R>& y) { return boxed_mul(x, y); };
    G.sigma = [](const Word& w) { return w.length() - 1; };
    G.check_domain = [](const Series<R>& f) {
        if (f.constant_one) throw value_error("group: constant-zero series required");
        if (!in_group(f, GroupVariant::Normalized))
            throw value_error("group: single-letter coefficients must be one");
    };
    return G;
}

namespace detail {

// d/dx at 0 of the Lagrange basis polynomials through the nodes 0..D.
inline std::vector<Rational> flow_derivative_weights(int D) {
    std::vector<Rational> c(D + 1);
    for (int j = 0; j <= D; ++j) {
        Rational denom(1);
        for (int k = 0; k <= D; ++k)
            if (k != j) denom *= Rational(j - k);
        Rational num;
        for (int i = 0; i <= D; ++i) {
            if (i == j) continue;
            Rational prod(1);
            for (int k = 0; k <= D; ++k)
                if (k != j && k != i) prod *= Rational(-k);
            num += prod;
        }
        c[j] = num / denom;
    }
    return c;
}

template <class R>
std::vector<int> sigma_levels(const GroupHandle<R>& G) {
    std::set<int> levels;
    for (const Word& w : enumerate_words(G.alphabet, G.max_deg)) {
        int s = G.sigma(w);
        if (s >= 1) levels.insert(s);
    }
    return std::vector<int>(levels.begin(), levels.end());
}

} // namespace detail

// Group inverse, solved level by level: the law at w is affine in the
// unknown coordinate with unit slope on the group domain.
template <class R>
Series<R> group_inverse(const GroupHandle<R>& G, const Series<R>& f) {
    G.check_domain(f);
    Series<R> g = G.unit;
    for (int level : detail::sigma_levels(G)) {
        Series<R> t = G.multiply(f, g);
        for (const Word& w : enumerate_words(G.alphabet, G.max_deg))
            if (G.sigma(w) == level)
                g.set(w, g.coefficient(w) + (G.unit.coefficient(w) - t.coefficient(w)));
    }
    return g;
}

template <class R>
Series<R> group_power(const GroupHandle<R>& G, const Series<R>& f, int n) {
    G.check_domain(f);
    if (n < 0) return group_power(G, group_inverse(G, f), -n);
    Series<R> acc = G.unit;
    Series<R> base = f;
    while (n > 0) {
        if (n & 1) acc = G.multiply(acc, base);
        base = n > 1 ? G.multiply(base, base) : base;
        n >>= 1;
    }
    return acc;
}

// Derivative at 0 of the polynomial flow n -> coefficients of f^n, by exact
// interpolation through the integer nodes 0..D, D the largest sigma degree.
template <class R>
CumulantVector<R> log_map(const GroupHandle<R>& G, const Series<R>& f) {
    G.check_domain(f);
    std::vector<int> levels = detail::sigma_levels(G);
    int D = levels.empty() ? 1 : levels.back();
    std::vector<Rational> weights = detail::flow_derivative_weights(D);
    std::vector<Series<R>> powers;
    powers.push_back(G.unit);
    for (int n = 1; n <= D; ++n) powers.push_back(G.multiply(powers.back(), f));
    CumulantVector<R> out(G.alphabet, G.max_deg, RingOps<R>::zero(f.proto));
    for (const Word& w : enumerate_words(G.alphabet, G.max_deg)) {
        R acc = RingOps<R>::zero(f.proto);
        for (int n = 0; n <= D; ++n)
            acc = acc + powers[n].coefficient(w) * RingOps<R>::from_rational(f.proto, weights[n]);
        out.set(w, acc);
    }
    return out;
}

// Inverse of log_map: the logarithm is the identity plus terms of strictly
// lower sigma degree, so it solves by a triangular sweep over levels.
template <class R>
Series<R> exp_map(const GroupHandle<R>& G, const CumulantVector<R>& xi) {
    if (!(xi.alphabet == G.alphabet) || xi.max_deg != G.max_deg)
        throw value_error("exp: cumulant vector does not match the group truncation");
    for (const auto& [w, v] : xi.kappa)
        if (G.sigma(w) < 1 && !(v == RingOps<R>::zero(xi.proto)))
            throw value_error("exp: nonzero cumulant on a frozen coordinate");
    Series<R> f = G.unit;
    for (int level : detail::sigma_levels(G)) {
        CumulantVector<R> v = log_map(G, f);
        for (const Word& w : enumerate_words(G.alphabet, G.max_deg))
            if (G.sigma(w) == level)
                f.set(w, f.coefficient(w) + (xi.get(w) - v.get(w)));
    }
    return f;
}

template <class R>
CumulantVector<R> bch_law(const GroupHandle<R>& G, const CumulantVector<R>& xi,
                          const CumulantVector<R>& eta) {
    return log_map(G, G.multiply(exp_map(G, xi), exp_map(G, eta)));
}

// Exact differential check for the moment-to-cumulant map at the formal
// origin: with f_w = eps * h_w for symbolic h and eps^2 = 0, the right boxed
// translation by the Moebius series returns f unchanged (only the one-block
// partition survives at eps-degree one).
inline bool r_transform_differential_identity(const Alphabet& a, int max_deg) {
    std::vector<std::string> names{"eps"};
    std::vector<Word> words = enumerate_words(a, max_deg);
    for (const Word& w : words) names.push_back("h:" + word_to_string(w));
    RingPtr ring = std::make_shared<const PolyRing>(names, "eps");
    Poly eps = Poly::variable(ring, "eps");
    Series<Poly> f(a, max_deg, false, Poly::zero(ring));
    for (const Word& w : words)
        f.set(w, eps * Poly::variable(ring, "h:" + word_to_string(w)));
    return r_transform(f) == f;
}

} // namespace ncprob
