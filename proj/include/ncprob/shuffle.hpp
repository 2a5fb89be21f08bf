#pragma once

#include <map>

#include "ncprob/flowlog.hpp"
#include "ncprob/series.hpp"
#include "ncprob/words.hpp"

namespace ncprob {

// Shuffle product of two words, with multiplicities.
inline std::map<Word, Rational> shuffle_mul(const Word& u, const Word& v) {
    std::map<Word, Rational> out;
    if (u.empty()) { out[v] = Rational(1); return out; }
    if (v.empty()) { out[u] = Rational(1); return out; }
    Word u0{std::vector<int>(u.letters.begin(), u.letters.end() - 1)};
    Word v0{std::vector<int>(v.letters.begin(), v.letters.end() - 1)};
    for (const auto& [w, c] : shuffle_mul(u0, v)) {
        Word t = w;
        t.letters.push_back(u.letters.back());
        out[t] += c;
    }
    for (const auto& [w, c] : shuffle_mul(u, v0)) {
        Word t = w;
        t.letters.push_back(v.letters.back());
        out[t] += c;
    }
    return out;
}

// Functionals on the word algebra are stored as Series<Rational>; the
// constant flag is the value on the empty word.  Convolution splits a word
// into a prefix/suffix pair at every position (deconcatenation coproduct).
inline Series<Rational> char_convolve(const Series<Rational>& f, const Series<Rational>& g) {
    if (!f.compatible(g)) {
        auto [fa, ga] = align_truncation(f, g);
        return char_convolve(fa, ga);
    }
    Series<Rational> out(f.alphabet, f.max_deg, f.constant_one && g.constant_one, f.proto);
    for (const Word& w : enumerate_words(f.alphabet, f.max_deg)) {
        Rational acc;
        int n = w.length();
        for (int k = 0; k <= n; ++k) {
            Word pre{std::vector<int>(w.letters.begin(), w.letters.begin() + k)};
            Word suf{std::vector<int>(w.letters.begin() + k, w.letters.end())};
            acc += f.coefficient(pre) * g.coefficient(suf);
        }
        out.set(w, acc);
    }
    return out;
}

// Value of a functional on a shuffle polynomial.
inline Rational eval_shuffle(const Series<Rational>& f, const std::map<Word, Rational>& poly) {
    Rational acc;
    for (const auto& [w, c] : poly) acc += c * f.coefficient(w);
    return acc;
}

// A character is multiplicative for the shuffle product.
inline bool is_character(const Series<Rational>& f) {
    if (!f.constant_one) return false;
    std::vector<Word> words = enumerate_words(f.alphabet, f.max_deg);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (degree(f.alphabet, u) + degree(f.alphabet, v) > f.max_deg) continue;
            if (eval_shuffle(f, shuffle_mul(u, v)) != f.coefficient(u) * f.coefficient(v))
                return false;
        }
    return true;
}

// Convolution logarithm of a unital functional: sum of (-1)^{k+1}/k times the
// k-th convolution power of f minus the counit; each factor consumes at least
// one letter, so the sum stops at the word length.
inline Series<Rational> hopf_log(const Series<Rational>& f) {
    if (!f.constant_one) throw value_error("log: unital functional required");
    Series<Rational> reduced = with_constant_flag(f, false);
    Series<Rational> out(f.alphabet, f.max_deg, false, f.proto);
    Series<Rational> power = reduced;
    int max_len = 0;
    for (const Word& w : enumerate_words(f.alphabet, f.max_deg))
        max_len = std::max(max_len, w.length());
    for (int k = 1; k <= max_len; ++k) {
        Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
        out = series_add(out, series_scalar_mul(power, c));
        if (k < max_len) power = char_convolve(power, reduced);
    }
    return out;
}

// Convolution exponential of an infinitesimal functional.
inline Series<Rational> hopf_exp(const Series<Rational>& xi) {
    if (xi.constant_one) throw value_error("exp: infinitesimal functional required");
    Series<Rational> out(xi.alphabet, xi.max_deg, true, xi.proto);
    Series<Rational> power = xi;
    Rational factorial(1);
    int max_len = 0;
    for (const Word& w : enumerate_words(xi.alphabet, xi.max_deg))
        max_len = std::max(max_len, w.length());
    for (int k = 1; k <= max_len; ++k) {
        factorial *= Rational(k);
        out = series_add(out, series_scalar_mul(power, Rational(1) / factorial));
        if (k < max_len) power = char_convolve(power, xi);
    }
    return out;
}

// Character group of the shuffle Hopf algebra under convolution.
inline GroupHandle<Rational> make_shuffle_group(const Alphabet& a, int max_deg) {
    GroupHandle<Rational> G;
    G.name = "shuffle-characters";
    G.alphabet = a;
    G.max_deg = max_deg;
    G.unit = Series<Rational>(a, max_deg, true, Rational());
    G.multiply = [](const Series<Rational>& x, const Series<Rational>& y) {
        return char_convolve(x, y);
    };
    G.sigma = [a](const Word& w) { return degree(a, w); };
    G.check_domain = [](const Series<Rational>& f) {
        if (!f.constant_one) throw value_error("group: unital functional required");
    };
    return G;
}

} // namespace ncprob
