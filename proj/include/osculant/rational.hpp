#pragma once

#include <gmpxx.h>
#include <string>

#include "osculant/errors.hpp"

namespace osculant::exactalg {

// Exact rational coefficients. GMP keeps the canonical form invariant
// (positive denominator, reduced fraction) for us.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

// GMP lacks long long constructors on some ABIs
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

Rational rational_from_string(const std::string& text);

// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// Element of Q[i]. Real and imaginary parts are exact rationals.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(int r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, Rational(-im)}; }

    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }
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

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        if (is_zero()) throw domain_error("GaussianRational: division by zero");
        Rational n = re * re + im * im;
        return {Rational(re / n), Rational(-im / n)};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

std::string to_string(const GaussianRational& z);

// Coefficient concepts shared by the polynomial templates.
inline bool coeff_is_zero(const Rational& q) { return q == 0; }
inline bool coeff_is_zero(const GaussianRational& z) { return z.is_zero(); }
inline Rational coeff_one(const Rational*) { return Rational(1); }
inline GaussianRational coeff_one(const GaussianRational*) { return GaussianRational(1); }

} // namespace osculant::exactalg
