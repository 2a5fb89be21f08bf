#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncprob/series.hpp"
#include "ncprob/words.hpp"

namespace ncprob {

enum class ProductKind { Tensor, Free, Boolean, Monotone, AntiMonotone };

inline std::string product_kind_name(ProductKind k) {
    switch (k) {
        case ProductKind::Tensor: return "tensor";
        case ProductKind::Free: return "free";
        case ProductKind::Boolean: return "boolean";
        case ProductKind::Monotone: return "monotone";
        case ProductKind::AntiMonotone: return "antimonotone";
    }
    return "?";
}

// Evaluates (f x g) on free-product monomials for one of the five universal
// products.  Holds the memo table for the free recursion; keep one evaluator
// per convolution pass so identical sub-monomials are computed once.
template <class R>
class ProductEvaluator {
public:
    ProductEvaluator(ProductKind kind, const Series<R>& f, const Series<R>& g)
        : kind_(kind), f_(&f), g_(&g) {
        if (!f.compatible(g)) throw value_error("product: incompatible series");
    }

    R eval(const FreeMonomial& m) {
        switch (kind_) {
            case ProductKind::Tensor: {
                return marginal(1, joined(m, 1)) * marginal(2, joined(m, 2));
            }
            case ProductKind::Boolean: {
                R acc = one();
                for (const Block& b : m.blocks) acc = acc * marginal(b.leg, b.word);
                return acc;
            }
            case ProductKind::Monotone: {
                R acc = marginal(1, joined(m, 1));
                for (const Block& b : m.blocks)
                    if (b.leg == 2) acc = acc * marginal(2, b.word);
                return acc;
            }
            case ProductKind::AntiMonotone: {
                R acc = marginal(2, joined(m, 2));
                for (const Block& b : m.blocks)
                    if (b.leg == 1) acc = acc * marginal(1, b.word);
                return acc;
            }
            case ProductKind::Free:
                return eval_free(m);
        }
        throw value_error("product: unknown kind");
    }

private:
    R zero() const { return RingOps<R>::zero(f_->proto); }
    R one() const { return RingOps<R>::one(f_->proto); }

    // Value of the leg marginal on a word; the empty product evaluates to one.
    R marginal(int leg, const Word& w) const {
        if (w.empty()) return one();
        return leg == 1 ? f_->coefficient(w) : g_->coefficient(w);
    }

    // Concatenation of all blocks of one leg, in order.
    static Word joined(const FreeMonomial& m, int leg) {
        Word out;
        for (const Block& b : m.blocks)
            if (b.leg == leg) out.letters.insert(out.letters.end(), b.word.letters.begin(), b.word.letters.end());
        return out;
    }

    // Moebius-style recursion over proper sub-products: the value on a_1..a_m is
    //   sum over I strictly inside {1..m} of (-1)^{m-|I|+1} (value on prod_I a_i)
    //   times the product of the leg marginals of the left-out blocks,
    // with value 1 on the empty product.  Restrictions re-contract at the seams.
    R eval_free(const FreeMonomial& m) {
        if (m.empty()) return one();
        if (m.size() == 1) return marginal(m.blocks[0].leg, m.blocks[0].word);
        auto hit = memo_.find(m);
        if (hit != memo_.end()) return hit->second;
        const int n = m.size();
        R total = zero();
        std::vector<int> picked;
        for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
            picked.clear();
            R outside = one();
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) picked.push_back(i);
                else outside = outside * marginal(m.blocks[i].leg, m.blocks[i].word);
            }
            R term = eval_free(restrict_monomial(m, picked)) * outside;
            // sign (-1)^{m-|I|+1}
            if ((n - static_cast<int>(picked.size())) % 2 == 0) total = total - term;
            else total = total + term;
        }
        memo_.emplace(m, total);
        return total;
    }

    ProductKind kind_;
    const Series<R>* f_;
    const Series<R>* g_;
    std::map<FreeMonomial, R> memo_;
};

template <class R>
R eval_product(ProductKind kind, const Series<R>& f, const Series<R>& g, const FreeMonomial& m) {
    ProductEvaluator<R> ev(kind, f, g);
    return ev.eval(m);
}

// Series whose coefficient at u is the ring variable "<prefix>:<u>"; the ring
// must declare one variable per enumerated word.
inline Series<Poly> symbolic_series(const Alphabet& a, int max_deg, const std::string& prefix,
                                    const RingPtr& ring, bool const_one) {
    Series<Poly> f(a, max_deg, const_one, Poly::zero(ring));
    for (const Word& w : enumerate_words(a, max_deg))
        f.set(w, Poly::variable(ring, prefix + ":" + word_to_string(w)));
    return f;
}

// Ring with variables X:<u>, Y:<u> for every word of degree <= max_deg.
inline RingPtr symbolic_law_ring(const Alphabet& a, int max_deg) {
    std::vector<std::string> names;
    for (const Word& w : enumerate_words(a, max_deg)) names.push_back("X:" + word_to_string(w));
    for (const Word& w : enumerate_words(a, max_deg)) names.push_back("Y:" + word_to_string(w));
    return std::make_shared<const PolyRing>(std::move(names));
}

// Free-product value on m with fully symbolic marginals (f -> X:, g -> Y:).
inline Poly eval_free_symbolic(const Alphabet& a, int max_deg, const FreeMonomial& m) {
    RingPtr ring = symbolic_law_ring(a, max_deg);
    Series<Poly> X = symbolic_series(a, max_deg, "X", ring, false);
    Series<Poly> Y = symbolic_series(a, max_deg, "Y", ring, false);
    return eval_product(ProductKind::Free, X, Y, m);
}

} // namespace ncprob
