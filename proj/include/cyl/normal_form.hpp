#pragma once

#include "cyl/operators.hpp"

namespace cyl {

/// Mean-coefficient reduction data for Dt + a(t) Dx + q(t):
/// a0, q0 are the means, A and Q the zero-mean antiderivatives with
/// A(0) = Q(0) = 0, and l0 = Dt + a0 Dx + q0 the constant normal form.
/// Everything is exact coefficient arithmetic.
struct NormalFormBundle {
    ComplexRational a0, q0;
    TrigPolynomial A, Q;
    FirstOrderConstant l0;
};

NormalFormBundle compute_normal_form(const TrigPolynomial& a, const TrigPolynomial& q);

} // namespace cyl
