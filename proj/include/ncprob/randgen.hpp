#pragma once

#include <random>

#include "ncprob/series.hpp"

namespace ncprob {

// Domain of a randomly drawn series: unrestricted coefficients, invertible
// single-letter coefficients, or single-letter coefficients pinned to one.
enum class RandomDomain { Plain, Invertible, Normalized };

// Small rational with numerator in -9..9 and denominator in 1..4.  Drawn via
// explicit modulo so results are identical across platforms for a fixed seed.
inline Rational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 4) + 1;
    return Rational(num, den);
}

inline Series<Rational> random_series(std::mt19937_64& rng, const Alphabet& a, int max_deg,
                                      bool const_one, RandomDomain domain = RandomDomain::Plain) {
    Series<Rational> f(a, max_deg, const_one);
    for (const Word& w : enumerate_words(a, max_deg)) {
        Rational c = random_rational(rng);
        if (w.length() == 1) {
            if (domain == RandomDomain::Normalized) c = Rational(1);
            else if (domain == RandomDomain::Invertible)
                while (c.is_zero()) c = random_rational(rng);
        }
        f.set(w, c);
    }
    return f;
}

} // namespace ncprob
