#include "cyl/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

namespace cyl {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// FFTW planner calls are not thread-safe; executions on distinct buffers are.
std::mutex planner_mutex;

/// One 1-D complex DFT plan plus its aligned buffer, reused across the rows
/// or columns of a single transform call.
class Dft1d {
public:
    Dft1d(int n, int sign) : n_(n) {
        buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(n)));
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan_ = fftw_plan_dft_1d(n, buf_, buf_, sign, FFTW_ESTIMATE);
    }
    ~Dft1d() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan_);
        fftw_free(buf_);
    }
    Dft1d(const Dft1d&) = delete;
    Dft1d& operator=(const Dft1d&) = delete;

    Complex* buffer() { return reinterpret_cast<Complex*>(buf_); }
    void execute() { fftw_execute(plan_); }

private:
    int n_;
    fftw_complex* buf_;
    fftw_plan plan_;
};

void check_finite(const char* what, const std::vector<Complex>& values) {
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ValidationError(std::string(what) + ": non-finite entries");
}

} // namespace

TorusSpectrum fourier_torus(const SampledField& f) {
    check_finite("fourier_torus", f.values);
    const CylinderGrid& g = f.grid;
    TorusSpectrum out(g);
    Dft1d dft(g.n_t, FFTW_FORWARD);
    for (int j = 0; j < g.n_x; ++j) {
        Complex* buf = dft.buffer();
        for (int l = 0; l < g.n_t; ++l) buf[l] = f.at(l, j);
        dft.execute();
        // F[K] = sum_l f_l e^{-2 pi i K l / n_t}; fhat(k) = F[k mod n_t] / n_t.
        for (int row = 0; row < g.n_t; ++row) {
            int k = g.k_of_row(row);
            int K = (k + g.n_t) % g.n_t;
            out.at(row, j) = buf[K] / static_cast<double>(g.n_t);
        }
    }
    return out;
}

SampledField inv_fourier_torus(const TorusSpectrum& spec) {
    check_finite("inv_fourier_torus", spec.values);
    const CylinderGrid& g = spec.grid;
    SampledField out(g);
    Dft1d dft(g.n_t, FFTW_BACKWARD);
    for (int j = 0; j < g.n_x; ++j) {
        Complex* buf = dft.buffer();
        for (int l = 0; l < g.n_t; ++l) buf[l] = Complex{0.0, 0.0};
        for (int row = 0; row < g.n_t; ++row) {
            int k = g.k_of_row(row);
            buf[(k + g.n_t) % g.n_t] = spec.at(row, j);
        }
        dft.execute(); // unnormalized backward DFT = sum_k g(k) e^{+2 pi i k l / n_t}
        for (int l = 0; l < g.n_t; ++l) out.at(l, j) = buf[l];
    }
    return out;
}

namespace {

// Shared x-row kernels: with x_j = -X + j dx and xi_m = (pi/X) m,
// x_j xi_m = -pi m + 2 pi j m / n_x, so e^{-i x_j xi_m} = (-1)^m e^{-2 pi i j m / n_x}.
template <typename In, typename Out>
void line_rows_forward(const In& in, Out& out) {
    const CylinderGrid& g = in.grid;
    Dft1d dft(g.n_x, FFTW_FORWARD);
    const double w = g.dx();
    for (int row = 0; row < g.n_t; ++row) {
        Complex* buf = dft.buffer();
        for (int j = 0; j < g.n_x; ++j) buf[j] = in.at(row, j);
        dft.execute();
        for (int col = 0; col < g.n_x; ++col) {
            int m = g.m_of_col(col);
            int M = (m + g.n_x) % g.n_x;
            double sign = (m % 2 == 0) ? 1.0 : -1.0;
            out.at(row, col) = w * sign * buf[M];
        }
    }
}

template <typename In, typename Out>
void line_rows_inverse(const In& in, Out& out) {
    const CylinderGrid& g = in.grid;
    Dft1d dft(g.n_x, FFTW_BACKWARD);
    const double w = g.dxi() / two_pi;
    for (int row = 0; row < g.n_t; ++row) {
        Complex* buf = dft.buffer();
        for (int j = 0; j < g.n_x; ++j) buf[j] = Complex{0.0, 0.0};
        for (int col = 0; col < g.n_x; ++col) {
            int m = g.m_of_col(col);
            double sign = (m % 2 == 0) ? 1.0 : -1.0;
            buf[(m + g.n_x) % g.n_x] = sign * in.at(row, col);
        }
        dft.execute();
        for (int j = 0; j < g.n_x; ++j) out.at(row, j) = w * buf[j];
    }
}

} // namespace

LineSpectrum fourier_line(const SampledField& f) {
    check_finite("fourier_line", f.values);
    LineSpectrum out(f.grid);
    line_rows_forward(f, out);
    return out;
}

SampledField inv_fourier_line(const LineSpectrum& spec) {
    check_finite("inv_fourier_line", spec.values);
    SampledField out(spec.grid);
    line_rows_inverse(spec, out);
    return out;
}

MixedSpectrum mixed_via_torus_first(const SampledField& f) {
    TorusSpectrum half = fourier_torus(f);
    MixedSpectrum out(f.grid);
    line_rows_forward(half, out);
    return out;
}

MixedSpectrum mixed_via_line_first(const SampledField& f) {
    check_finite("mixed_transform", f.values);
    LineSpectrum half = fourier_line(f);
    // Torus transform along rows of the line spectrum.
    const CylinderGrid& g = f.grid;
    MixedSpectrum out(g);
    Dft1d dft(g.n_t, FFTW_FORWARD);
    for (int col = 0; col < g.n_x; ++col) {
        Complex* buf = dft.buffer();
        for (int l = 0; l < g.n_t; ++l) buf[l] = half.at(l, col);
        dft.execute();
        for (int row = 0; row < g.n_t; ++row) {
            int k = g.k_of_row(row);
            out.at(row, col) = buf[(k + g.n_t) % g.n_t] / static_cast<double>(g.n_t);
        }
    }
    return out;
}

MixedSpectrum mixed_transform(const SampledField& f) { return mixed_via_torus_first(f); }

SampledField inv_mixed(const MixedSpectrum& spec) {
    check_finite("inv_mixed", spec.values);
    const CylinderGrid& g = spec.grid;
    // Inverse line along rows (k fixed), then inverse torus along columns.
    TorusSpectrum half(g);
    line_rows_inverse(spec, half);
    return inv_fourier_torus(half);
}

SampledField spectral_derivative(const SampledField& f, int alpha, int beta) {
    if (alpha < 0 || beta < 0) throw ValidationError("spectral_derivative: negative order");
    if (alpha == 0 && beta == 0) return f;
    MixedSpectrum g = mixed_transform(f);
    const CylinderGrid& gr = f.grid;
    for (int row = 0; row < gr.n_t; ++row) {
        Complex kfac = std::pow(Complex(0.0, gr.k_of_row(row)), alpha);
        for (int col = 0; col < gr.n_x; ++col) {
            Complex xfac = std::pow(Complex(0.0, gr.xi(col)), beta);
            g.at(row, col) *= kfac * xfac;
        }
    }
    return inv_mixed(g);
}

MixedSpectrum apply_multiplier(const MixedSpectrum& g, const std::function<Complex(int, double)>& sigma) {
    MixedSpectrum out(g.grid);
    for (int row = 0; row < g.grid.n_t; ++row) {
        int k = g.grid.k_of_row(row);
        for (int col = 0; col < g.grid.n_x; ++col) {
            Complex s = sigma(k, g.grid.xi(col));
            if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
                throw ValidationError("apply_multiplier: non-finite symbol value");
            out.at(row, col) = s * g.at(row, col);
        }
    }
    return out;
}

TruncationDiagnostic truncation_diagnostic(const SampledField& f) {
    TruncationDiagnostic d;
    const CylinderGrid& g = f.grid;
    for (int l = 0; l < g.n_t; ++l)
        d.x_boundary = std::max({d.x_boundary, std::abs(f.at(l, 0)), std::abs(f.at(l, g.n_x - 1))});
    MixedSpectrum spec = mixed_transform(f);
    for (int row = 0; row < g.n_t; ++row)
        d.xi_boundary = std::max({d.xi_boundary, std::abs(spec.at(row, 0)), std::abs(spec.at(row, g.n_x - 1))});
    return d;
}

double norm_l1_discrete(const SampledField& f) {
    double s = 0.0;
    for (const auto& v : f.values) s += std::abs(v);
    return f.grid.dt() * f.grid.dx() * s;
}

double norm_l2sq_weighted(const SampledField& f) {
    double s = 0.0;
    for (const auto& v : f.values) s += std::norm(v);
    return s * f.grid.dx() / f.grid.n_t;
}

double norm_l2sq_weighted(const MixedSpectrum& g) {
    double s = 0.0;
    for (const auto& v : g.values) s += std::norm(v);
    return s * g.grid.dxi() / two_pi;
}

} // namespace cyl
