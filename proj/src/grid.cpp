#include "cyl/grid.hpp"

#include <cmath>
#include <string>

namespace cyl {

CylinderGrid make_grid(int n_t, int n_x, double X) {
    if (n_t < 4 || n_t % 2 != 0)
        throw ValidationError("make_grid: n_t must be even and >= 4, got " + std::to_string(n_t));
    if (n_x < 4 || n_x % 2 != 0)
        throw ValidationError("make_grid: n_x must be even and >= 4, got " + std::to_string(n_x));
    if (!(X > 0.0) || !std::isfinite(X)) throw ValidationError("make_grid: X must be positive and finite");
    return CylinderGrid{n_t, n_x, X};
}

} // namespace cyl
