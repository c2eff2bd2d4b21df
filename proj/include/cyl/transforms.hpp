#pragma once

#include <functional>

#include "cyl/field.hpp"

namespace cyl {

/// Partial Fourier series in t: fhat(k, x_j) = (1/n_t) sum_l f(t_l, x_j) e^{-i k t_l}.
/// On grid samples this is the exact DFT of the data (trapezoid rule on a
/// periodic integrand), so the pair below is exactly mutually inverse.
TorusSpectrum fourier_torus(const SampledField& f);

/// Inverse series: f(t_l, x_j) = sum_k g(k, x_j) e^{i k t_l}.
SampledField inv_fourier_torus(const TorusSpectrum& g);

/// Partial Fourier transform in x: fhat(t_l, xi_m) = dx sum_j f(t_l, x_j) e^{-i x_j xi_m}.
/// The contract is this weighted sum (a quadrature of the integral); the FFT
/// plus the (-1)^m phase correction for the shifted origin implements it to
/// machine precision.
LineSpectrum fourier_line(const SampledField& f);

/// Inverse transform with the 1/(2 pi) normalization:
/// f(t_l, x_j) = (dxi / 2 pi) sum_m g(t_l, xi_m) e^{i x_j xi_m}.
/// With these weights dx * dxi * n_x = 2 pi, so this inverts fourier_line exactly.
SampledField inv_fourier_line(const LineSpectrum& g);

/// Composition of the two partial transforms (either order; they commute on
/// grid data, which the tests check).
MixedSpectrum mixed_transform(const SampledField& f);
SampledField inv_mixed(const MixedSpectrum& g);

/// The two composition orders, exposed for the order-independence property.
MixedSpectrum mixed_via_torus_first(const SampledField& f);
MixedSpectrum mixed_via_line_first(const SampledField& f);

/// d^alpha/dt^alpha d^beta/dx^beta via the multipliers (ik)^alpha (i xi)^beta.
SampledField spectral_derivative(const SampledField& f, int alpha, int beta);

/// Pointwise product with a symbol on the dual lattice. Throws on non-finite
/// symbol values.
MixedSpectrum apply_multiplier(const MixedSpectrum& g, const std::function<Complex(int, double)>& sigma);

/// Largest |f| on the x-boundary columns and |f~| on the xi-boundary columns:
/// a truncation/aliasing quality report, not an enforced bound.
struct TruncationDiagnostic {
    double x_boundary = 0.0;
    double xi_boundary = 0.0;
};
TruncationDiagnostic truncation_diagnostic(const SampledField& f);

/// Discrete norms used by tests and reports.
double norm_l1_discrete(const SampledField& f);   // dt * dx * sum |f|
double norm_l2sq_weighted(const SampledField& f); // (1/n_t) sum |f|^2 dx
double norm_l2sq_weighted(const MixedSpectrum& g); // sum |f~|^2 dxi / (2 pi)

} // namespace cyl
