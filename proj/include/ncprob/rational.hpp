#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "ncprob/error.hpp"

namespace ncprob {

// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw value_error("rational: division by zero");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    static Rational from_string(const std::string& text) {
        std::size_t slash = text.find('/');
        std::string num = text.substr(0, slash == std::string::npos ? text.size() : slash);
        std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw parse_error("rational: cannot parse \"" + text + "\"");
        if (num[0] == '+') num.erase(0, 1);
        Rational r;
        r.v_ = mpq_class(mpz_class(num), mpz_class(den));
        if (mpz_sgn(r.v_.get_den().get_mpz_t()) == 0)
            throw value_error("rational: division by zero in \"" + text + "\"");
        r.v_.canonicalize();
        return r;
    }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw value_error("rational: division by zero");
        return wrap(v_ / o.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw value_error("rational: inverse of zero");
        return wrap(1 / v_);
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string numerator() const { return v_.get_num().get_str(); }
    std::string denominator() const { return v_.get_den().get_str(); }

private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }
    static bool valid_int(const std::string& t, bool sign_ok) {
        std::size_t i = 0;
        if (sign_ok && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    }

    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

} // namespace ncprob
