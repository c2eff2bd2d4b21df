#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "cyl/errors.hpp"

namespace cyl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

/// floor(r) as an integer.
BigInt rational_floor(const Rational& r);
/// ceil(r) as an integer.
BigInt rational_ceil(const Rational& r);
/// Nearest integer (ties away from zero).
BigInt rational_round(const Rational& r);
/// Distance from r to the nearest integer.
Rational distance_to_integers(const Rational& r);

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Largest rational lb with lb <= sqrt(r) and sqrt(r) - lb <= 1/scale.
/// Requires r >= 0 and scale >= 1.
Rational sqrt_lower_bound(const Rational& r, const BigInt& scale);

/// The rational with the smallest denominator in [lo, hi] (ties by smallest
/// numerator magnitude). Requires lo <= hi.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

/// Exact rational value of a finite double.
Rational rational_from_double(double v);

/// Nearest "simple" rational within +-tol of v (continued-fraction search).
Rational rationalize(double v, const Rational& tol);

/// Parses "7", "-3/2". Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);
/// Parses the strict forms plus decimal literals ("0.25") exactly.
Rational parse_rational_or_decimal(std::string_view text);

std::string to_string(const Rational& r);

/// Complex number with exact rational real and imaginary parts. The scalar
/// domain of every SGH decision: zero tests and integrality tests are exact.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ComplexRational(long r, long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    ComplexRational conj() const { return {re, -im}; }
    /// |z|^2, exact.
    Rational norm2() const { return re * re + im * im; }
    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b);
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
};

/// i (the imaginary unit).
inline ComplexRational imaginary_unit() { return {Rational(0), Rational(1)}; }

std::string to_string(const ComplexRational& z);

} // namespace cyl
