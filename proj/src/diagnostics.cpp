#include "cyl/diagnostics.hpp"

#include <cmath>

#include "cyl/transforms.hpp"

namespace cyl {

double seminorm(const SampledField& f, int alpha, int beta, int gamma) {
    if (alpha < 0 || beta < 0 || gamma < 0) throw ValidationError("seminorm: negative order");
    SampledField d = spectral_derivative(f, alpha, beta);
    double m = 0.0;
    for (int l = 0; l < f.grid.n_t; ++l)
        for (int j = 0; j < f.grid.n_x; ++j)
            m = std::max(m, std::pow(std::abs(f.grid.x(j)), gamma) * std::abs(d.at(l, j)));
    return m;
}

double seminorm_pN(const SampledField& f, int N) {
    if (N < 0) throw ValidationError("seminorm_pN: negative N");
    double sum = 0.0;
    for (int alpha = 0; alpha <= N; ++alpha)
        for (int beta = 0; alpha + beta <= N; ++beta)
            for (int gamma = 0; alpha + beta + gamma <= N; ++gamma) sum += seminorm(f, alpha, beta, gamma);
    return sum;
}

std::string_view certificate_type_name(CertificateType t) {
    switch (t) {
        case CertificateType::Mixed: return "mixed";
        case CertificateType::Torus: return "torus";
        case CertificateType::Line: return "line";
    }
    return "?";
}

namespace {

/// (-ix)^beta f: the exact grid-level representative of d_xi^beta under F_R.
SampledField weight_by_minus_ix(const SampledField& f, int beta) {
    if (beta == 0) return f;
    SampledField out = f;
    for (int l = 0; l < f.grid.n_t; ++l)
        for (int j = 0; j < f.grid.n_x; ++j)
            out.at(l, j) *= std::pow(Complex(0.0, -f.grid.x(j)), beta);
    return out;
}

template <typename Weight>
DecayCertificate extremal_constant(CertificateType type, int N, int alpha, int beta, const CylinderGrid& grid,
                                   const std::vector<Complex>& values, Weight&& weight) {
    DecayCertificate cert;
    cert.type = type;
    cert.N = N;
    cert.alpha = alpha;
    cert.beta = beta;
    cert.grid = grid;
    for (int r = 0; r < grid.n_t; ++r)
        for (int c = 0; c < grid.n_x; ++c) {
            double v = std::abs(values[static_cast<std::size_t>(r) * grid.n_x + c]) * weight(r, c);
            if (v > cert.C) {
                cert.C = v;
                cert.argmax_row = r;
                cert.argmax_col = c;
            }
        }
    return cert;
}

} // namespace

DecayCertificate decay_certificate_mixed(const SampledField& f, int N, int beta) {
    if (N < 0 || beta < 0) throw ValidationError("decay_certificate_mixed: negative order");
    MixedSpectrum d = mixed_transform(weight_by_minus_ix(f, beta));
    const CylinderGrid& g = f.grid;
    return extremal_constant(CertificateType::Mixed, N, 0, beta, g, d.values, [&](int r, int c) {
        double k = g.k_of_row(r), xi = g.xi(c);
        return std::pow(1.0 + k * k, N / 2.0) * std::pow(1.0 + xi * xi, N / 2.0);
    });
}

DecayCertificate decay_certificate_torus(const SampledField& f, int N, int beta) {
    if (N < 0 || beta < 0) throw ValidationError("decay_certificate_torus: negative order");
    TorusSpectrum d = fourier_torus(spectral_derivative(f, 0, beta));
    const CylinderGrid& g = f.grid;
    return extremal_constant(CertificateType::Torus, N, 0, beta, g, d.values, [&](int r, int c) {
        double k = g.k_of_row(r), x = g.x(c);
        return std::pow(1.0 + k * k, N / 2.0) * std::pow(1.0 + x * x, N / 2.0);
    });
}

DecayCertificate decay_certificate_line(const SampledField& f, int N, int alpha, int beta) {
    if (N < 0 || alpha < 0 || beta < 0) throw ValidationError("decay_certificate_line: negative order");
    SampledField dt = spectral_derivative(weight_by_minus_ix(f, beta), alpha, 0);
    LineSpectrum d = fourier_line(dt);
    const CylinderGrid& g = f.grid;
    return extremal_constant(CertificateType::Line, N, alpha, beta, g, d.values, [&](int, int c) {
        double xi = g.xi(c);
        return std::pow(1.0 + xi * xi, N / 2.0);
    });
}

bool recheck_certificate(const DecayCertificate& cert, const SampledField& f) {
    DecayCertificate again;
    switch (cert.type) {
        case CertificateType::Mixed: again = decay_certificate_mixed(f, cert.N, cert.beta); break;
        case CertificateType::Torus: again = decay_certificate_torus(f, cert.N, cert.beta); break;
        case CertificateType::Line: again = decay_certificate_line(f, cert.N, cert.alpha, cert.beta); break;
    }
    // The reported constant must still dominate the inequality everywhere;
    // allow roundoff slack of one part in 1e12.
    return again.C <= cert.C * (1.0 + 1e-12);
}

GrowthCheck tempered_growth_check(const MixedSpectrum& g, double C, int N) {
    if (C < 0.0 || N < 0) throw ValidationError("tempered_growth_check: C >= 0 and N >= 0 required");
    GrowthCheck res;
    for (int r = 0; r < g.grid.n_t; ++r)
        for (int c = 0; c < g.grid.n_x; ++c) {
            double k = g.grid.k_of_row(r), xi = g.grid.xi(c);
            double bound = C * std::pow(1.0 + k * k, N / 2.0) * std::pow(1.0 + xi * xi, N / 2.0);
            double excess = std::abs(g.at(r, c)) - bound;
            if (excess > res.worst_excess) {
                res.ok = false;
                res.worst_excess = excess;
                res.worst_row = r;
                res.worst_col = c;
            }
        }
    return res;
}

std::vector<double> refinement_divergence_probe(std::string_view builtin, std::span<const CylinderGrid> ladder,
                                                const BuiltinParams& params) {
    std::vector<double> p0;
    p0.reserve(ladder.size());
    for (const CylinderGrid& g : ladder) p0.push_back(seminorm_pN(sample_builtin(builtin, params, g), 0));
    return p0;
}

} // namespace cyl
