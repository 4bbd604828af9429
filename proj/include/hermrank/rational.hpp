#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "errors.hpp"

namespace hermrank {

/// Arbitrary-precision rational number, kept in canonical form at all times
/// (positive denominator, gcd(num, den) = 1).  Thin wrapper over GMP's
/// mpq_class; the wrapper exists because raw mpq_class does *not* canonicalize
/// values built from a numerator/denominator pair, so 2/6 != 1/3 there.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, ergonomic in formulas
    explicit Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p", "-p", or "p/q" (q != 0).  Throws parse_error on anything else.
    static Rational from_string(const std::string& s) {
        if (s.empty()) throw parse_error("empty rational literal");
        for (std::size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
            if (!ok) throw parse_error("bad rational literal '" + s + "'");
        }
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw parse_error("bad rational literal '" + s + "'");
        if (v.get_den() == 0) throw division_by_zero("rational literal with zero denominator");
        v.canonicalize();
        Rational r;
        r.v_ = v;
        return r;
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact square root if this is a perfect square of a rational, else nullopt.
    std::optional<Rational> exact_sqrt() const {
        if (sign() < 0) return std::nullopt;
        mpz_class n = num(), d = den();
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rational(rn, rd);
    }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace hermrank
