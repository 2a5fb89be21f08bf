#include "ncprob/dualconv.hpp"

#include <set>

namespace ncprob {

DecompositionReport verify_decomposition(const Alphabet& a, const Word& w, LawEngine& engine) {
    check_word(a, w);
    if (w.empty()) throw value_error("decomposition: empty word");
    Poly law = engine.law(w);
    const RingPtr& ring = engine.ring();

    auto var_id = [&](const std::string& name) {
        int id = ring->id(name);
        if (id < 0) throw value_error("decomposition: missing variable " + name);
        return id;
    };
    auto letters_mono = [&](const std::string& prefix) {
        Mono m;
        for (int x : w.letters)
            m = mono_mul(m, Mono{{var_id(prefix + ":" + std::to_string(x)), 1}});
        return m;
    };

    Mono xw{{var_id("X:" + word_to_string(w)), 1}};
    Mono yw{{var_id("Y:" + word_to_string(w)), 1}};
    Mono xs = letters_mono("X");
    Mono ys = letters_mono("Y");

    DecompositionReport rep;
    rep.word = w;
    rep.pure_x = law.coefficient(mono_mul(xw, ys));
    rep.pure_y = law.coefficient(mono_mul(xs, yw));
    rep.catalan_term = law.coefficient(mono_mul(xs, ys));

    const int n = w.length();
    Rational expected_catalan = Rational(catalan_number(n - 1));
    if (n % 2 == 0) expected_catalan = -expected_catalan;
    rep.pure_ok = rep.pure_x.is_one() && rep.pure_y.is_one();
    rep.catalan_ok = rep.catalan_term == expected_catalan;

    std::set<Mono> patterns{mono_mul(xw, ys), mono_mul(xs, yw), mono_mul(xs, ys)};
    Poly mixed = Poly::zero(ring);
    for (const auto& [m, c] : law.terms())
        if (!patterns.count(m)) mixed += Poly::constant(ring, c) * mono_to_poly(ring, m);
    rep.mixed = mixed.to_string();
    return rep;
}

} // namespace ncprob
