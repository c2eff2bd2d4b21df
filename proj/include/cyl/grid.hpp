#pragma once

#include <cmath>
#include <numbers>

#include "cyl/errors.hpp"

namespace cyl {

/// Uniform discretization of the cylinder T^1 x [-X, X) together with its
/// dual lattice. Sample points are t_l = 2*pi*l/n_t and x_j = -X + j*dx;
/// dual frequencies are the integers k in [-n_t/2, n_t/2) and
/// xi_m = (pi/X)*m for m in [-n_x/2, n_x/2).
struct CylinderGrid {
    int n_t = 0;
    int n_x = 0;
    double X = 0.0;

    double dt() const { return 2.0 * std::numbers::pi / n_t; }
    double dx() const { return 2.0 * X / n_x; }
    double dxi() const { return std::numbers::pi / X; }
    double xi_max() const { return dxi() * (n_x / 2); }

    double t(int l) const { return dt() * l; }
    double x(int j) const { return -X + dx() * j; }

    // Spectral rows/columns are stored in ascending frequency order.
    int k_of_row(int row) const { return row - n_t / 2; }
    int row_of_k(int k) const { return k + n_t / 2; }
    int m_of_col(int col) const { return col - n_x / 2; }
    int col_of_m(int m) const { return m + n_x / 2; }
    double xi(int col) const { return dxi() * m_of_col(col); }

    int min_k() const { return -n_t / 2; }
    int max_k() const { return n_t / 2 - 1; }

    std::size_t size() const { return static_cast<std::size_t>(n_t) * static_cast<std::size_t>(n_x); }

    friend bool operator==(const CylinderGrid& a, const CylinderGrid& b) {
        return a.n_t == b.n_t && a.n_x == b.n_x && a.X == b.X;
    }
};

/// Validated constructor: n_t, n_x even and >= 4, X > 0.
CylinderGrid make_grid(int n_t, int n_x, double X);

} // namespace cyl
