#include "cyl/solver.hpp"

#include <cmath>

#include "cyl/transforms.hpp"

namespace cyl {

namespace {

/// sigma(k, xi) for a constant-coefficient operator, as a double-valued
/// multiplier: i * (P(xi) + Q(k)).
std::function<Complex(int, double)> sigma_multiplier(const Symbol& sym) {
    return [sym](int k, double xi) { return sym.sigma(static_cast<double>(k), xi); };
}

SampledField apply_variable(const FirstOrderVariable& op, const SampledField& u) {
    SampledField du_t = spectral_derivative(u, 1, 0);
    SampledField du_x = spectral_derivative(u, 0, 1);
    SampledField out(u.grid);
    for (int l = 0; l < u.grid.n_t; ++l) {
        Complex a_l = op.a.eval(u.grid.t(l));
        Complex q_l = op.q.eval(u.grid.t(l));
        for (int j = 0; j < u.grid.n_x; ++j)
            out.at(l, j) = du_t.at(l, j) + a_l * du_x.at(l, j) + q_l * u.at(l, j);
    }
    return out;
}

} // namespace

SampledField apply_operator(const DifferentialOperator& op, const SampledField& u) {
    if (const auto* v = std::get_if<FirstOrderVariable>(&op)) return apply_variable(*v, u);
    MixedSpectrum spec = apply_multiplier(mixed_transform(u), sigma_multiplier(symbol_of(op)));
    return inv_mixed(spec);
}

SolveResult solve_constant(const DifferentialOperator& op, const SampledField& f) {
    if (std::holds_alternative<FirstOrderVariable>(op))
        throw ValidationError("solve_constant: variable-coefficient operator; use solve_variable_real");
    SghReport report = decide_sgh(op);
    if (!report.is_sgh()) throw NotSghRefusal(std::move(report));

    Symbol sym = symbol_of(op);
    MixedSpectrum spec = mixed_transform(f);
    for (int row = 0; row < f.grid.n_t; ++row) {
        double k = f.grid.k_of_row(row);
        for (int col = 0; col < f.grid.n_x; ++col) {
            Complex s = sym.sigma(k, f.grid.xi(col));
            if (std::abs(s) < 1e-12)
                throw InconsistencyAlarm("solve_constant: SGH verdict but |sigma| < 1e-12 on the lattice");
            spec.at(row, col) /= s;
        }
    }
    SolveResult result{inv_mixed(spec), std::move(report), 0.0, {}};
    result.residual_inf = max_abs_diff(apply_operator(op, result.u), f);
    return result;
}

SampledField psi_a(const SampledField& u, const TrigPolynomial& A, int sign) {
    if (sign != 1 && sign != -1) throw ValidationError("psi_a: sign must be +1 or -1");
    if (!A.is_real_valued()) throw ValidationError("psi_a: A must be real-valued");
    LineSpectrum spec = fourier_line(u);
    for (int l = 0; l < u.grid.n_t; ++l) {
        double shift = sign * A.eval_real(u.grid.t(l));
        for (int col = 0; col < u.grid.n_x; ++col)
            spec.at(l, col) *= std::exp(Complex(0.0, u.grid.xi(col) * shift));
    }
    return inv_fourier_line(spec);
}

SampledField psi_q(const SampledField& u, const TrigPolynomial& Q, int sign) {
    if (sign != 1 && sign != -1) throw ValidationError("psi_q: sign must be +1 or -1");
    SampledField out(u.grid);
    for (int l = 0; l < u.grid.n_t; ++l) {
        Complex factor = std::exp(static_cast<double>(sign) * Q.eval(u.grid.t(l)));
        for (int j = 0; j < u.grid.n_x; ++j) out.at(l, j) = factor * u.at(l, j);
    }
    return out;
}

SampledField psi_full(const SampledField& u, const NormalFormBundle& bundle, int sign) {
    if (sign == 1) return psi_q(psi_a(u, bundle.A, +1), bundle.Q, +1);
    if (sign == -1) return psi_a(psi_q(u, bundle.Q, -1), bundle.A, -1);
    throw ValidationError("psi_full: sign must be +1 or -1");
}

double conjugation_residual(const FirstOrderVariable& op, const NormalFormBundle& bundle, const SampledField& u) {
    SampledField lhs = apply_operator(DifferentialOperator{bundle.l0}, psi_full(u, bundle, +1));
    SampledField rhs = psi_full(apply_operator(DifferentialOperator{op}, u), bundle, +1);
    return max_abs_diff(lhs, rhs);
}

SolveResult solve_variable_real(const FirstOrderVariable& op, const SampledField& f) {
    if (!op.a.is_real_valued()) throw ValidationError("solve_variable_real: a(t) must be real-valued");
    NormalFormBundle bundle = compute_normal_form(op.a, op.q);

    SghReport report = decide_sgh_first_order(bundle.l0.c1, bundle.l0.c2, bundle.l0.c3);
    report.method = SghReport::Method::ConjugatedToConstant;
    report.normal_form = bundle.l0;
    if (!report.is_sgh()) throw NotSghRefusal(std::move(report));

    std::vector<std::string> warnings;
    double max_shift = bundle.A.max_abs_on(4 * std::max(f.grid.n_t, 64));
    if (max_shift > f.grid.X / 4.0)
        warnings.push_back("psi window: max |A| = " + std::to_string(max_shift) + " exceeds X/4 = " +
                           std::to_string(f.grid.X / 4.0) + "; the x-shift may wrap across the truncation boundary");

    SolveResult inner = solve_constant(DifferentialOperator{bundle.l0}, psi_full(f, bundle, +1));
    SolveResult result{psi_full(inner.u, bundle, -1), std::move(report), 0.0, std::move(warnings)};
    result.residual_inf = max_abs_diff(apply_operator(DifferentialOperator{op}, result.u), f);
    return result;
}

} // namespace cyl
