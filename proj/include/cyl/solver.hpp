#pragma once

#include "cyl/field.hpp"
#include "cyl/normal_form.hpp"
#include "cyl/sgh.hpp"

namespace cyl {

/// L applied to grid samples. Constant coefficients go through the mixed
/// spectrum with the operator's true Fourier symbol; the variable case uses
/// spectral derivatives plus pointwise multiplication by a(t_l), q(t_l).
SampledField apply_operator(const DifferentialOperator& op, const SampledField& u);

struct SolveResult {
    SampledField u;
    SghReport report;
    double residual_inf = 0.0; // || L u - f ||_inf, recomputed after the solve
    std::vector<std::string> warnings;
};

/// Solve L u = f by symbol division: u~ = f~ / sigma. Refuses non-SGH
/// operators (NotSghRefusal carries the witness); raises InconsistencyAlarm
/// if |sigma| dips below 1e-12 on the lattice despite an SGH verdict.
SolveResult solve_constant(const DifferentialOperator& op, const SampledField& f);

/// Gauge factor Psi_a^{sign}: x-translation by sign*A(t) implemented as the
/// line-spectrum multiplier e^{i sign xi A(t)}. A must be real-valued.
SampledField psi_a(const SampledField& u, const TrigPolynomial& A, int sign);

/// Gauge factor Psi_q^{sign}: pointwise multiplication by e^{sign Q(t)}.
SampledField psi_q(const SampledField& u, const TrigPolynomial& Q, int sign);

/// Full conjugation Psi = Psi_q o Psi_a (the order forced by chaining
/// L_{a0} Psi_a = Psi_a L and L0 Psi_q = Psi_q L_{a0}; the two factors
/// commute, both acting per t-slice).
SampledField psi_full(const SampledField& u, const NormalFormBundle& bundle, int sign);

/// || L0(Psi u) - Psi(L u) ||_inf — the conjugation identity residual.
double conjugation_residual(const FirstOrderVariable& op, const NormalFormBundle& bundle, const SampledField& u);

/// Reduce to the normal form, solve there, and pull back:
/// u = Psi^{-1}( solve_constant(L0, Psi f) ). Warns when max |A| > X/4
/// (the x-shift may push mass across the truncation boundary).
SolveResult solve_variable_real(const FirstOrderVariable& op, const SampledField& f);

} // namespace cyl
