#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "cyl/field.hpp"

namespace cyl {

/// sup over the grid of |x^gamma d_t^alpha d_x^beta f| (derivatives spectral).
double seminorm(const SampledField& f, int alpha, int beta, int gamma);

/// p_N = sum of seminorm(f, alpha, beta, gamma) over alpha+beta+gamma <= N.
double seminorm_pN(const SampledField& f, int N);

enum class CertificateType { Mixed, Torus, Line };
std::string_view certificate_type_name(CertificateType t);

/// Extremal constant for one of the decay inequalities, together with where
/// on the dual grid it is attained. This is a grid-consistent certificate:
/// a finite grid can support or falsify rapid decay, never prove it.
struct DecayCertificate {
    CertificateType type = CertificateType::Mixed;
    int N = 0;
    int alpha = 0; // used by the line certificate only
    int beta = 0;
    double C = 0.0;
    int argmax_row = 0;
    int argmax_col = 0;
    CylinderGrid grid;
};

/// Smallest C with |d_xi^beta f~(k, xi)| <= C (1+k^2)^{-N/2} (1+xi^2)^{-N/2}
/// on the whole dual lattice. d_xi^beta f~ is computed exactly on the grid as
/// the mixed transform of (-ix)^beta f.
DecayCertificate decay_certificate_mixed(const SampledField& f, int N, int beta);

/// Same for |d_x^beta fhat(k, x)| <= C (1+k^2)^{-N/2} (1+x^2)^{-N/2}.
DecayCertificate decay_certificate_torus(const SampledField& f, int N, int beta);

/// Same for |d_t^alpha d_xi^beta fhat(t, xi)| <= C (1+xi^2)^{-N/2}.
DecayCertificate decay_certificate_line(const SampledField& f, int N, int alpha, int beta);

/// Re-check a certificate against the raw inequality on its own grid.
bool recheck_certificate(const DecayCertificate& cert, const SampledField& f);

/// Does |g(k, xi)| <= C (1+k^2)^{N/2} (1+xi^2)^{N/2} hold everywhere?
/// Reports the worst violation location and ratio when it does not.
struct GrowthCheck {
    bool ok = true;
    int worst_row = 0;
    int worst_col = 0;
    double worst_excess = 0.0; // largest |g| - bound, positive iff violated
};
GrowthCheck tempered_growth_check(const MixedSpectrum& g, double C, int N);

/// p_0 per ladder grid for a builtin sampled fresh on each grid. For the
/// tan-bump the sequence diverges as grid points approach t = pi/2.
std::vector<double> refinement_divergence_probe(std::string_view builtin, std::span<const CylinderGrid> ladder,
                                                const BuiltinParams& params = {});

} // namespace cyl
