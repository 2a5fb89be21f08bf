#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncprob/error.hpp"
#include "ncprob/rational.hpp"

namespace ncprob {

// Variable context shared by all polynomials of one computation.  An optional
// distinguished variable eps makes the ring the truncation at eps^2 = 0:
// multiplication discards every monomial of eps-degree >= 2.
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> names, const std::string& eps_name = "")
        : names_(std::move(names)) {
        for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
            if (names_[i].empty()) throw value_error("poly ring: empty variable name");
            if (!index_.emplace(names_[i], i).second)
                throw value_error("poly ring: duplicate variable " + names_[i]);
        }
        if (!eps_name.empty()) {
            auto it = index_.find(eps_name);
            if (it == index_.end()) throw value_error("poly ring: eps variable not declared");
            eps_ = it->second;
        }
    }

    int arity() const { return static_cast<int>(names_.size()); }
    const std::string& name(int id) const { return names_.at(id); }
    int id(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }
    int eps_id() const { return eps_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    int eps_ = -1;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// Exponent list sorted by variable id, exponents nonzero (Laurent: may be negative).
using Mono = std::vector<std::pair<int, int>>;

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

inline int mono_exponent(const Mono& m, int var) {
    for (const auto& [v, e] : m)
        if (v == var) return e;
    return 0;
}

// Sparse multivariate Laurent polynomial over Rational.
class Poly {
public:
    Poly() = default; // zero of a detached ring; usable only after assignment
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly one(RingPtr ring) { return constant(std::move(ring), Rational(1)); }
    static Poly constant(RingPtr ring, const Rational& c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_.emplace(Mono{}, c);
        return p;
    }
    static Poly variable(RingPtr ring, const std::string& name, int exponent = 1) {
        int id = ring->id(name);
        if (id < 0) throw value_error("poly: unknown variable " + name);
        Poly p(std::move(ring));
        if (exponent != 0) p.terms_.emplace(Mono{{id, exponent}}, Rational(1));
        else p.terms_.emplace(Mono{}, Rational(1));
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::map<Mono, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
    }

    Poly operator+(const Poly& o) const {
        same_ring(o);
        Poly out = *this;
        for (const auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }
    Poly operator-(const Poly& o) const {
        same_ring(o);
        Poly out = *this;
        for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
        return out;
    }
    Poly operator-() const {
        Poly out(ring_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    Poly operator*(const Poly& o) const {
        same_ring(o);
        Poly out(ring_);
        int eps = ring_ ? ring_->eps_id() : -1;
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Mono m = mono_mul(ma, mb);
                if (eps >= 0 && mono_exponent(m, eps) >= 2) continue;
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }
    Poly operator*(const Rational& c) const {
        Poly out(ring_);
        if (c.is_zero()) return out;
        for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
        return out;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    // Units are single terms; the inverse negates exponents (Laurent).
    bool is_unit() const { return terms_.size() == 1 && !terms_.begin()->second.is_zero(); }
    Poly inverse() const {
        if (!is_unit()) throw value_error("poly: inverse of a non-monomial polynomial");
        const auto& [m, c] = *terms_.begin();
        Poly out(ring_);
        Mono inv = m;
        for (auto& [v, e] : inv) e = -e;
        out.terms_.emplace(std::move(inv), c.inverse());
        return out;
    }

    Rational coefficient(Mono m) const {
        std::sort(m.begin(), m.end());
        m.erase(std::remove_if(m.begin(), m.end(), [](const auto& p) { return p.second == 0; }),
                m.end());
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational() : it->second;
    }

    // Total degree under per-variable weights; nullopt if terms disagree
    // (the zero polynomial counts as homogeneous of any weight and returns 0).
    template <class WeightFn>
    std::optional<int> weighted_degree(WeightFn&& weight_of) const {
        std::optional<int> deg;
        for (const auto& [m, c] : terms_) {
            int d = 0;
            for (const auto& [v, e] : m) d += weight_of(v) * e;
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
        return deg ? deg : std::optional<int>(0);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::string> parts;
        parts.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            std::string t = c.to_string();
            std::vector<std::pair<std::string, int>> factors;
            factors.reserve(m.size());
            for (const auto& [v, e] : m) factors.emplace_back(ring_->name(v), e);
            std::sort(factors.begin(), factors.end());
            for (const auto& [name, e] : factors) {
                t += "*" + name;
                if (e != 1) t += "^" + std::to_string(e);
            }
            parts.push_back(std::move(t));
        }
        std::sort(parts.begin(), parts.end());
        std::string out = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
        return out;
    }

    static Poly from_string(RingPtr ring, const std::string& text) {
        Poly out(ring);
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(" + ", pos);
            std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            pos = next == std::string::npos ? text.size() : next + 3;
            out.add_parsed_term(term);
        }
        return out;
    }

private:
    void same_ring(const Poly& o) const {
        if (ring_ != o.ring_) throw value_error("poly: mixed rings");
    }
    void add_term(const Mono& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_parsed_term(const std::string& term) {
        if (term.empty()) throw parse_error("poly: empty term");
        if (term == "0") return;
        std::vector<std::string> toks;
        std::size_t pos = 0;
        while (pos <= term.size()) {
            std::size_t star = term.find('*', pos);
            toks.push_back(term.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
            if (star == std::string::npos) break;
            pos = star + 1;
        }
        Rational c = Rational::from_string(toks[0]);
        Mono m;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            std::size_t caret = toks[i].rfind('^');
            std::string name = toks[i].substr(0, caret);
            int e = 1;
            if (caret != std::string::npos) {
                try {
                    e = std::stoi(toks[i].substr(caret + 1));
                } catch (const std::exception&) {
                    throw parse_error("poly: bad exponent in " + toks[i]);
                }
            }
            int id = ring_->id(name);
            if (id < 0) throw parse_error("poly: unknown variable " + name);
            m = mono_mul(m, Mono{{id, e}});
        }
        add_term(m, c);
    }

    RingPtr ring_;
    std::map<Mono, Rational> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

inline Poly mono_to_poly(const RingPtr& ring, const Mono& m) {
    Poly out = Poly::one(ring);
    for (const auto& [v, e] : m)
        out *= Poly::variable(ring, ring->name(v), e);
    return out;
}

} // namespace ncprob
