#pragma once

#include <complex>
#include <map>
#include <string>

#include "cyl/rational.hpp"

namespace cyl {

/// Finite trigonometric polynomial c(t) = sum_k chat_k e^{ikt} with exact
/// complex rational coefficients. Coefficient access is total (absent modes
/// read as zero), so means and antiderivatives stay exact.
class TrigPolynomial {
public:
    TrigPolynomial() = default;
    static TrigPolynomial constant(ComplexRational c);
    /// alpha*cos(k t); k >= 1.
    static TrigPolynomial cosine(int k, const ComplexRational& alpha);
    /// alpha*sin(k t); k >= 1.
    static TrigPolynomial sine(int k, const ComplexRational& alpha);

    void set_coeff(int k, ComplexRational c);
    ComplexRational coeff(int k) const;
    const std::map<int, ComplexRational>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    int max_mode() const; // largest |k| with nonzero coefficient (0 if none)

    /// chat_{-k} == conj(chat_k) for all k (exact test).
    bool is_real_valued() const;

    ComplexRational mean() const { return coeff(0); }

    std::complex<double> eval(double t) const;
    /// Evaluation of a real-valued polynomial; drops the (roundoff) imaginary part.
    double eval_real(double t) const;
    double max_abs_on(int n_samples) const;

    TrigPolynomial derivative() const;
    /// F(t) = int_0^t c(s) ds - mean(c) * t, normalized so F(0) = 0.
    /// Exact coefficient arithmetic: F_k = c_k/(ik) for k != 0.
    TrigPolynomial zero_mean_antiderivative() const;

    friend TrigPolynomial operator+(const TrigPolynomial& a, const TrigPolynomial& b);
    friend TrigPolynomial operator-(const TrigPolynomial& a, const TrigPolynomial& b);
    friend TrigPolynomial operator*(const ComplexRational& s, const TrigPolynomial& a);
    friend bool operator==(const TrigPolynomial& a, const TrigPolynomial& b) { return a.c_ == b.c_; }

    /// Rendering in the operator mini-language ("1 + sin(t)" style).
    std::string str() const;

private:
    std::map<int, ComplexRational> c_; // mode -> coefficient, no zero entries
};

} // namespace cyl
