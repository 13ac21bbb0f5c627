#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

#include "qdl/error.hpp"

namespace qdl {

// Exact arithmetic backbone. Rational is an arbitrary-precision fraction kept
// normalized (gcd 1, positive denominator) by the backend.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p" or "p/q", exact.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

double rational_to_double(const Rational& q);

// Floor of p/q as an integer (needed for reducing rationals mod 1 / mod 2).
Int rational_floor(const Rational& q);

// Element of Q(i). Closed under +,-,*,/ and conjugation.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r) : re(r) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }
    // |z|^2, a non-negative rational.
    Rational norm() const { return re * re + im * im; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n = b.norm();
        if (n == 0) fail(ErrorKind::Domain, "division by zero in Q(i)");
        GaussRational num = a * b.conj();
        return {num.re / n, num.im / n};
    }
    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
    GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {rational_to_double(re), rational_to_double(im)};
    }
};

// Human/grammar-compatible rendering, e.g. "3/2", "i", "(1/2-3*i)".
std::string gauss_to_string(const GaussRational& z);

}  // namespace qdl
