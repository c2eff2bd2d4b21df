#pragma once

#include <string>
#include <variant>

#include "cyl/polynomial.hpp"
#include "cyl/trigpoly.hpp"

namespace cyl {

/// c1*Dt + c2*Dx + c3 with constant complex rational coefficients.
/// Acting on e^{i(kt + xi x)} it multiplies by i*(c1 k + c2 xi - i c3).
struct FirstOrderConstant {
    ComplexRational c1, c2, c3;
};

/// Operator specified through its separable symbol form: the factor by
/// which it multiplies e^{i(kt + xi x)} is i*(P(xi) + Q(k)). The SGH
/// question is whether P(xi) + Q(k) vanishes on Z x R.
struct SeparablePoly {
    CPoly p; // in xi
    CPoly q; // in k
    enum class RealSide { P, Q, Both };
    RealSide real_side = RealSide::Both;
};

/// Dt + a(t)*Dx + q(t) with trig-polynomial coefficients, a real-valued.
struct FirstOrderVariable {
    TrigPolynomial a, q;
};

using DifferentialOperator = std::variant<FirstOrderConstant, SeparablePoly, FirstOrderVariable>;

/// Validating constructors. Each either returns a well-formed operator or
/// throws ValidationError naming the broken precondition.
FirstOrderConstant make_first_order_constant(ComplexRational c1, ComplexRational c2, ComplexRational c3);
SeparablePoly make_separable(CPoly p, CPoly q);
FirstOrderVariable make_first_order_variable(TrigPolynomial a, TrigPolynomial q);

bool is_constant_coefficient(const DifferentialOperator& op);

/// Canonical text in the operator mini-language; parse(pretty_print(op))
/// reproduces the operator.
std::string pretty_print(const DifferentialOperator& op);

} // namespace cyl
