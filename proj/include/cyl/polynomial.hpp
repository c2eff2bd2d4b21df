#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cyl/rational.hpp"

namespace cyl {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs[i] multiplies x^i; the vector carries no trailing zeros, so the
/// zero polynomial is the empty vector and degree() is -1 for it.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(Rational v) { return RatPoly({std::move(v)}); }
    static RatPoly monomial(int degree, Rational coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : Rational(0); }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    RatPoly derivative() const;
    /// Bounds of p over [lo, hi] by interval Horner. Not tight, but correct.
    void eval_interval(const Rational& lo, const Rational& hi, Rational& out_lo, Rational& out_hi) const;
    /// Strict bound B: every real root has |root| < B.
    Rational root_bound() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rational& s, const RatPoly& a);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    void divmod(const RatPoly& d, RatPoly& q, RatPoly& r) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd over the rationals (zero polynomial if both inputs are zero).
RatPoly poly_gcd(RatPoly a, RatPoly b);
/// p / gcd(p, p'): same real roots, all simple.
RatPoly squarefree_part(const RatPoly& p);

/// Interval containing exactly one real root. lo == hi means the root is
/// the exact rational value lo.
struct RootInterval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    double approx() const { return to_double(midpoint()); }
};

/// Sturm chain of the squarefree part; reusable for many count queries.
class SturmChain {
public:
    explicit SturmChain(const RatPoly& p);
    /// Number of distinct real roots in (a, b], a <= b.
    int count_roots(const Rational& a, const Rational& b) const;
    int count_all_roots() const;
    const RatPoly& squarefree() const { return sf_; }
    const Rational& bound() const { return bound_; }

private:
    int sign_variations(const Rational& x) const;
    RatPoly sf_;
    Rational bound_;
    std::vector<RatPoly> chain_;
};

/// Isolating intervals for all distinct real roots, sorted ascending.
std::vector<RootInterval> isolate_real_roots(const RatPoly& p);
int count_real_roots(const RatPoly& p);
bool has_real_root(const RatPoly& p);
/// Shrinks an isolating interval until hi - lo <= width (no-op when exact).
void refine_root(const SturmChain& chain, RootInterval& iv, const Rational& width);
/// Convenience: isolate and refine in one go.
std::vector<RootInterval> isolate_real_roots(const RatPoly& p, const Rational& width);

/// Polynomial with exact complex rational coefficients, stored as the
/// pair of real-coefficient polynomials (re, im).
struct CPoly {
    RatPoly re, im;

    CPoly() = default;
    CPoly(RatPoly r, RatPoly i) : re(std::move(r)), im(std::move(i)) {}
    explicit CPoly(const std::vector<ComplexRational>& coeffs);

    int degree() const { return std::max(re.degree(), im.degree()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_constant() const { return re.is_constant() && im.is_constant(); }
    bool has_real_coeffs() const { return im.is_zero(); }
    ComplexRational coeff(int i) const { return {re.coeff(i), im.coeff(i)}; }

    ComplexRational eval(const Rational& x) const { return {re.eval(x), im.eval(x)}; }
    std::complex<double> eval(double x) const { return {re.eval(x), im.eval(x)}; }

    friend CPoly operator+(const CPoly& a, const CPoly& b) { return {a.re + b.re, a.im + b.im}; }
    friend CPoly operator-(const CPoly& a, const CPoly& b) { return {a.re - b.re, a.im - b.im}; }
    friend bool operator==(const CPoly& a, const CPoly& b) { return a.re == b.re && a.im == b.im; }

    std::string str(const std::string& var = "x") const;
};

} // namespace cyl
