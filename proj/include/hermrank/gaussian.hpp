#pragma once

#include <complex>
#include <string>

#include "rational.hpp"

namespace hermrank {

/// Element of Q(i): a Gaussian rational re + im*i with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long n) : re(n), im(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    /// Squared modulus |a|^2 = re^2 + im^2, an exact nonnegative rational.
    Rational norm() const { return re * re + im * im; }

    GaussianRational conj() const { return GaussianRational(re, -im); }

    GaussianRational operator-() const { return GaussianRational(-re, -im); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw division_by_zero("division by zero Gaussian rational");
        Rational n = o.norm();
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = r;
        im = i;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Human-readable form, e.g. "2", "i", "-3/2*i", "1/2+3*i", "1-i".
    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string istr;
        if (im == Rational(1)) {
            istr = "i";
        } else if (im == Rational(-1)) {
            istr = "-i";
        } else {
            istr = im.str() + "*i";
        }
        if (re.is_zero()) return istr;
        if (im.sign() > 0) return re.str() + "+" + istr;
        return re.str() + istr;
    }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline GaussianRational conj(const GaussianRational& a) { return a.conj(); }

}  // namespace hermrank
