#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyl/grid.hpp"

namespace cyl {

using Complex = std::complex<double>;

/// Which of the four index conventions a grid array uses.
enum class FieldKind : std::uint8_t {
    Field = 0, // [l][j]  (t, x) samples
    Torus = 1, // [k][j]  partial Fourier series in t
    Line = 2,  // [l][m]  partial Fourier transform in x
    Mixed = 3, // [k][m]  both transforms applied
};

std::string_view kind_name(FieldKind k);

namespace detail {

/// Row-major complex matrix tied to a grid. Rows are t-samples or k-modes,
/// columns are x-samples or xi-modes, depending on the kind tag.
template <FieldKind Kind>
struct GridArray {
    static constexpr FieldKind kind = Kind;

    CylinderGrid grid;
    std::vector<Complex> values;

    GridArray() = default;
    explicit GridArray(const CylinderGrid& g) : grid(g), values(g.size(), Complex{0.0, 0.0}) {}
    GridArray(const CylinderGrid& g, std::vector<Complex> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.size()) throw ValidationError("grid array: value count does not match grid");
    }

    Complex& at(int row, int col) { return values[static_cast<std::size_t>(row) * grid.n_x + col]; }
    const Complex& at(int row, int col) const { return values[static_cast<std::size_t>(row) * grid.n_x + col]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : values) m = std::max(m, std::abs(v));
        return m;
    }

    friend GridArray operator-(const GridArray& a, const GridArray& b) {
        if (!(a.grid == b.grid)) throw ValidationError("grid mismatch");
        GridArray out(a.grid);
        for (std::size_t i = 0; i < a.values.size(); ++i) out.values[i] = a.values[i] - b.values[i];
        return out;
    }
};

} // namespace detail

using SampledField = detail::GridArray<FieldKind::Field>;
using TorusSpectrum = detail::GridArray<FieldKind::Torus>;
using LineSpectrum = detail::GridArray<FieldKind::Line>;
using MixedSpectrum = detail::GridArray<FieldKind::Mixed>;

/// Max-norm distance between two same-shape arrays.
template <FieldKind K>
double max_abs_diff(const detail::GridArray<K>& a, const detail::GridArray<K>& b) {
    if (!(a.grid == b.grid)) throw ValidationError("grid mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

/// Parameters of the built-in sample functions (ignored where meaningless).
struct BuiltinParams {
    int k0 = 1;      // integer t-frequency of the wave builtins
    double xi0 = 0.0; // x-frequency of plane_wave
};

/// Point samples of a named closed-form function:
///   gaussian_wave  e^{i k0 t} e^{-x^2/2}
///   plane_wave     e^{i(k0 t + xi0 x)} / (2 pi)
///   lorentz_wave   e^{i k0 t} / (1 + x^2)
///   tanbump        tan(t) e^{-1/(1-(x-tan t)^2)} on |x - tan t| < 1, else 0
///   constant_one   1
/// tanbump is 0 at t = pi/2 and 3*pi/2 and wherever |x - tan t| >= 1.
SampledField sample_builtin(std::string_view name, const BuiltinParams& params, const CylinderGrid& grid);

bool is_builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// Deterministic pseudo-random field (values in the complex unit square),
/// identical across platforms for a given seed.
SampledField random_field(const CylinderGrid& grid, std::uint64_t seed);

} // namespace cyl
