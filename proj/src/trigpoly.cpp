#include "cyl/trigpoly.hpp"

#include <cmath>
#include <sstream>

namespace cyl {

TrigPolynomial TrigPolynomial::constant(ComplexRational c) {
    TrigPolynomial p;
    p.set_coeff(0, std::move(c));
    return p;
}

TrigPolynomial TrigPolynomial::cosine(int k, const ComplexRational& alpha) {
    if (k < 1) throw ValidationError("cosine: mode must be >= 1");
    TrigPolynomial p;
    ComplexRational half = alpha * ComplexRational(Rational(1, 2));
    p.set_coeff(k, half);
    p.set_coeff(-k, half);
    return p;
}

TrigPolynomial TrigPolynomial::sine(int k, const ComplexRational& alpha) {
    if (k < 1) throw ValidationError("sine: mode must be >= 1");
    TrigPolynomial p;
    // sin(kt) = (e^{ikt} - e^{-ikt}) / (2i)
    ComplexRational half_over_i = alpha * ComplexRational(Rational(0), Rational(-1, 2));
    p.set_coeff(k, half_over_i);
    p.set_coeff(-k, -half_over_i);
    return p;
}

void TrigPolynomial::set_coeff(int k, ComplexRational c) {
    if (c.is_zero())
        c_.erase(k);
    else
        c_[k] = std::move(c);
}

ComplexRational TrigPolynomial::coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? ComplexRational() : it->second;
}

bool TrigPolynomial::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

int TrigPolynomial::max_mode() const {
    int m = 0;
    for (const auto& [k, v] : c_) m = std::max(m, std::abs(k));
    return m;
}

bool TrigPolynomial::is_real_valued() const {
    for (const auto& [k, v] : c_)
        if (!(coeff(-k) == v.conj())) return false;
    return true;
}

std::complex<double> TrigPolynomial::eval(double t) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, v] : c_) acc += v.to_complex() * std::exp(std::complex<double>(0.0, k * t));
    return acc;
}

double TrigPolynomial::eval_real(double t) const { return eval(t).real(); }

double TrigPolynomial::max_abs_on(int n_samples) const {
    double m = 0.0;
    for (int i = 0; i < n_samples; ++i) m = std::max(m, std::abs(eval(2.0 * std::numbers::pi * i / n_samples)));
    return m;
}

TrigPolynomial TrigPolynomial::derivative() const {
    TrigPolynomial d;
    for (const auto& [k, v] : c_)
        if (k != 0) d.set_coeff(k, v * ComplexRational(Rational(0), Rational(k)));
    return d;
}

TrigPolynomial TrigPolynomial::zero_mean_antiderivative() const {
    TrigPolynomial f;
    ComplexRational at_zero; // sum of the k != 0 coefficients of F
    for (const auto& [k, v] : c_) {
        if (k == 0) continue;
        ComplexRational fk = v / ComplexRational(Rational(0), Rational(k)); // v / (ik)
        f.set_coeff(k, fk);
        at_zero = at_zero + fk;
    }
    f.set_coeff(0, -at_zero); // F(0) = 0
    return f;
}

TrigPolynomial operator+(const TrigPolynomial& a, const TrigPolynomial& b) {
    TrigPolynomial out = a;
    for (const auto& [k, v] : b.c_) out.set_coeff(k, out.coeff(k) + v);
    return out;
}

TrigPolynomial operator-(const TrigPolynomial& a, const TrigPolynomial& b) {
    TrigPolynomial out = a;
    for (const auto& [k, v] : b.c_) out.set_coeff(k, out.coeff(k) - v);
    return out;
}

TrigPolynomial operator*(const ComplexRational& s, const TrigPolynomial& a) {
    TrigPolynomial out;
    for (const auto& [k, v] : a.c_) out.set_coeff(k, s * v);
    return out;
}

std::string TrigPolynomial::str() const {
    if (c_.empty()) return "0";
    // Regroup exponentials into constant + cos/sin terms per mode. Negative
    // coefficients become " - " separators so the text reparses.
    std::ostringstream os;
    bool first = true;
    auto emit = [&](ComplexRational coef, const std::string& atom) {
        if (coef.is_zero()) return;
        bool neg = coef.re < 0 || (coef.re == 0 && coef.im < 0);
        if (neg) coef = -coef;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string cs = to_string(coef);
        bool parens = coef.re != 0 && coef.im != 0;
        if (atom.empty()) {
            os << (parens ? "(" + cs + ")" : cs);
        } else if (coef == ComplexRational(1)) {
            os << atom;
        } else {
            os << (parens ? "(" + cs + ")" : cs) << " " << atom;
        }
    };
    emit(coeff(0), "");
    for (int k = 1; k <= max_mode(); ++k) {
        ComplexRational ck = coeff(k), cmk = coeff(-k);
        ComplexRational cosc = ck + cmk;                                               // coefficient of cos(kt)
        ComplexRational sinc = ComplexRational(Rational(0), Rational(1)) * (ck - cmk); // coefficient of sin(kt)
        std::string suffix = k == 1 ? "(t)" : "(" + std::to_string(k) + "t)";
        emit(cosc, "cos" + suffix);
        emit(sinc, "sin" + suffix);
    }
    return os.str();
}

} // namespace cyl
