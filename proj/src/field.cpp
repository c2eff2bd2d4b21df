#include "cyl/field.hpp"

#include <cmath>
#include <random>

namespace cyl {

std::string_view kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::Field: return "field";
        case FieldKind::Torus: return "torus";
        case FieldKind::Line: return "line";
        case FieldKind::Mixed: return "mixed";
    }
    return "?";
}

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require_representable_k0(int k0, const CylinderGrid& g, std::string_view name) {
    if (k0 <= -g.n_t / 2 || k0 >= g.n_t / 2)
        throw ValidationError(std::string(name) + ": |k0| must be < n_t/2 for this grid");
}

} // namespace

SampledField sample_builtin(std::string_view name, const BuiltinParams& p, const CylinderGrid& grid) {
    SampledField f(grid);
    if (name == "constant_one") {
        for (auto& v : f.values) v = 1.0;
        return f;
    }
    if (name == "gaussian_wave" || name == "lorentz_wave") {
        require_representable_k0(p.k0, grid, name);
        for (int l = 0; l < grid.n_t; ++l) {
            Complex phase = std::exp(Complex(0.0, p.k0 * grid.t(l)));
            for (int j = 0; j < grid.n_x; ++j) {
                double x = grid.x(j);
                double env = name[0] == 'g' ? std::exp(-0.5 * x * x) : 1.0 / (1.0 + x * x);
                f.at(l, j) = phase * env;
            }
        }
        return f;
    }
    if (name == "plane_wave") {
        require_representable_k0(p.k0, grid, name);
        if (!std::isfinite(p.xi0)) throw ValidationError("plane_wave: xi0 must be finite");
        for (int l = 0; l < grid.n_t; ++l)
            for (int j = 0; j < grid.n_x; ++j)
                f.at(l, j) = std::exp(Complex(0.0, p.k0 * grid.t(l) + p.xi0 * grid.x(j))) / two_pi;
        return f;
    }
    if (name == "tanbump") {
        for (int l = 0; l < grid.n_t; ++l) {
            // Exactly pi/2 or 3*pi/2 on this grid: the whole row is 0.
            if (4 * l == grid.n_t || 4 * l == 3 * grid.n_t) continue;
            double w = std::tan(grid.t(l));
            for (int j = 0; j < grid.n_x; ++j) {
                double s = grid.x(j) - w;
                if (std::abs(s) < 1.0) f.at(l, j) = w * std::exp(-1.0 / (1.0 - s * s));
            }
        }
        return f;
    }
    throw ValidationError("unknown builtin '" + std::string(name) + "'");
}

bool is_builtin(std::string_view name) {
    for (const auto& n : builtin_names())
        if (n == name) return true;
    return false;
}

std::vector<std::string> builtin_names() {
    return {"gaussian_wave", "plane_wave", "lorentz_wave", "tanbump", "constant_one"};
}

SampledField random_field(const CylinderGrid& grid, std::uint64_t seed) {
    SampledField f(grid);
    std::mt19937_64 gen(seed);
    // Map raw bits to [-1, 1) directly; the raw mt19937_64 stream is
    // specified by the standard, so this is reproducible everywhere.
    auto unit = [&gen]() { return (gen() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    for (auto& v : f.values) {
        double re = unit(), im = unit();
        v = Complex(re, im);
    }
    return f;
}

} // namespace cyl
