// Independent oracles for the test suites. Everything here is a literal
// transcription of a definition (O(n^2) sums, closed forms, condition
// tables) and must stay decoupled from the library's implementation paths.
#pragma once

#include <cmath>
#include <complex>

#include "cyl/field.hpp"
#include "cyl/rational.hpp"

namespace oracle {

using cyl::Complex;
using cyl::CylinderGrid;
using cyl::Rational;

// ---- O(n^2) direct summation transforms (no FFT anywhere) ----

inline cyl::TorusSpectrum naive_fourier_torus(const cyl::SampledField& f) {
    const CylinderGrid& g = f.grid;
    cyl::TorusSpectrum out(g);
    for (int row = 0; row < g.n_t; ++row) {
        int k = g.k_of_row(row);
        for (int j = 0; j < g.n_x; ++j) {
            Complex acc{0.0, 0.0};
            for (int l = 0; l < g.n_t; ++l) acc += f.at(l, j) * std::exp(Complex(0.0, -k * g.t(l)));
            out.at(row, j) = acc / static_cast<double>(g.n_t);
        }
    }
    return out;
}

inline cyl::SampledField naive_inv_fourier_torus(const cyl::TorusSpectrum& s) {
    const CylinderGrid& g = s.grid;
    cyl::SampledField out(g);
    for (int l = 0; l < g.n_t; ++l)
        for (int j = 0; j < g.n_x; ++j) {
            Complex acc{0.0, 0.0};
            for (int row = 0; row < g.n_t; ++row)
                acc += s.at(row, j) * std::exp(Complex(0.0, g.k_of_row(row) * g.t(l)));
            out.at(l, j) = acc;
        }
    return out;
}

inline cyl::LineSpectrum naive_fourier_line(const cyl::SampledField& f) {
    const CylinderGrid& g = f.grid;
    cyl::LineSpectrum out(g);
    for (int l = 0; l < g.n_t; ++l)
        for (int col = 0; col < g.n_x; ++col) {
            Complex acc{0.0, 0.0};
            for (int j = 0; j < g.n_x; ++j) acc += f.at(l, j) * std::exp(Complex(0.0, -g.x(j) * g.xi(col)));
            out.at(l, col) = g.dx() * acc;
        }
    return out;
}

inline cyl::SampledField naive_inv_fourier_line(const cyl::LineSpectrum& s) {
    const CylinderGrid& g = s.grid;
    cyl::SampledField out(g);
    const double w = g.dxi() / (2.0 * std::numbers::pi);
    for (int l = 0; l < g.n_t; ++l)
        for (int j = 0; j < g.n_x; ++j) {
            Complex acc{0.0, 0.0};
            for (int col = 0; col < g.n_x; ++col)
                acc += s.at(l, col) * std::exp(Complex(0.0, g.x(j) * g.xi(col)));
            out.at(l, j) = w * acc;
        }
    return out;
}

// ---- closed forms ----

// F_R(e^{-x^2/2})(xi) = sqrt(2 pi) e^{-xi^2/2} with the e^{-i x xi} convention.
inline double gaussian_line_transform(double xi) {
    return std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * xi * xi);
}

// F_R(x e^{-x^2/2})(xi) = -i sqrt(2 pi) xi e^{-xi^2/2}.
inline Complex gaussian_x_line_transform(double xi) {
    return Complex(0.0, -1.0) * std::sqrt(2.0 * std::numbers::pi) * xi * std::exp(-0.5 * xi * xi);
}

// ---- Corollary condition tables, transcribed verbatim ----
// L = Dt + (a+ib) Dx + q is SGH iff one bullet holds:
//   b != 0 and a Re(q)/b + Im(q) not in Z
//   b == 0 and Re(q) != 0
//   b == Re(q) == 0 == a and Im(q) not in Z
inline bool bullet_sgh_L(const Rational& a, const Rational& b, const Rational& re_q, const Rational& im_q) {
    auto in_Z = [](const Rational& r) { return cyl::is_integer(r); };
    if (b != 0 && !in_Z(a * re_q / b + im_q)) return true;
    if (b == 0 && re_q != 0) return true;
    if (b == 0 && re_q == 0 && a == 0 && !in_Z(im_q)) return true;
    return false;
}

// L~ = (a+ib) Dt + Dx + q is SGH iff:
//   b != 0 and Re(q)/b not in Z
//   b == 0 and Re(q) != 0
inline bool bullet_sgh_Ltilde(const Rational& b, const Rational& re_q) {
    auto in_Z = [](const Rational& r) { return cyl::is_integer(r); };
    if (b != 0 && !in_Z(re_q / b)) return true;
    if (b == 0 && re_q != 0) return true;
    return false;
}

// The sweep values used by the exhaustive verdict gallery.
inline std::vector<Rational> sweep_values() {
    std::vector<Rational> v;
    for (long n = -3; n <= 3; ++n) v.emplace_back(n);
    v.emplace_back(Rational(1, 2));
    v.emplace_back(Rational(-1, 2));
    v.emplace_back(Rational(3, 2));
    v.emplace_back(Rational(-3, 2));
    return v;
}

} // namespace oracle
