#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cyl/normal_form.hpp"
#include "cyl/operators.hpp"

namespace cyl {

using Complex = std::complex<double>;

/// Exact zero of the symbol form: integer k and a real xi given either
/// exactly (xi_lo == xi_hi) or by an isolating interval of a rational
/// polynomial root.
struct Witness {
    BigInt k;
    Rational xi_lo, xi_hi;
    bool exact() const { return xi_lo == xi_hi; }
    double xi_approx() const { return to_double((xi_lo + xi_hi) / 2); }
};

/// Outcome of a Schwartz-global-hypoellipticity decision, with its
/// certificate: a zero witness when not SGH, a positive lower bound on the
/// symbol form when SGH.
struct SghReport {
    enum class Verdict { Sgh, NotSgh };
    enum class Method { FirstOrderClosedForm, SeparablePolyDecision, ConjugatedToConstant };

    Verdict verdict = Verdict::Sgh;
    Method method = Method::FirstOrderClosedForm;
    std::optional<Witness> witness;          // present iff NotSgh
    std::optional<Rational> gap;             // present iff Sgh; > 0
    bool gap_is_estimate = false;            // true when the gap came from a box scan
    std::optional<FirstOrderConstant> normal_form; // for variable-coefficient inputs
    std::vector<std::string> notes;

    bool is_sgh() const { return verdict == Verdict::Sgh; }
};

/// Refusal to solve with a non-SGH operator; carries the witness.
struct NotSghRefusal : Error {
    SghReport report;
    explicit NotSghRefusal(SghReport r)
        : Error("operator is not Schwartz globally hypoelliptic"), report(std::move(r)) {}
};

/// The separable form P(xi) + Q(k) whose real-lattice zero set decides SGH.
/// The operator's true Fourier symbol is i * (P(xi) + Q(k)): acting on
/// e^{i(kt + xi x)} the operator multiplies by exactly that factor.
struct Symbol {
    CPoly p; // in xi
    CPoly q; // in k

    Complex form(double k, double xi) const { return p.eval(xi) + q.eval(k); }
    ComplexRational form(const Rational& k, const Rational& xi) const {
        return {p.re.eval(xi) + q.re.eval(k), p.im.eval(xi) + q.im.eval(k)};
    }
    Complex sigma(double k, double xi) const { return Complex(0.0, 1.0) * form(k, xi); }
};

/// Symbol of a constant-coefficient operator. Variable-coefficient input is
/// rejected: conjugate to the normal form first.
Symbol symbol_of(const DifferentialOperator& op);

/// Exact decision for c1 Dt + c2 Dx + c3 (c1 != 0 or c2 != 0): splits
/// c1 k + c2 xi - i c3 = 0 into its two real linear equations over
/// (k, xi) in Z x R and classifies the solution set. The SGH gap is the
/// exact distance from the integer-indexed family of lines to zero.
SghReport decide_sgh_first_order(const ComplexRational& c1, const ComplexRational& c2, const ComplexRational& c3);

/// Exact decision for the separable form via real-root isolation; see the
/// case analysis in the implementation. SGH verdicts carry a box-scan gap
/// estimate, NotSGH verdicts an exact witness.
SghReport decide_sgh_separable(const SeparablePoly& op);

/// Dispatch; variable-coefficient operators are decided through their
/// constant normal form (method ConjugatedToConstant, normal_form attached).
SghReport decide_sgh(const DifferentialOperator& op);

/// Independent oracle: raw float scan of |P(xi)+Q(k)| over k in [-K, K],
/// xi on n uniform samples of [-Xi, Xi]. Parallel over k, deterministic.
struct ScanResult {
    double min_value = 0.0;
    long long argmin_k = 0;
    double argmin_xi = 0.0;
};
ScanResult brute_force_min_symbol(const Symbol& sym, long long K, double Xi, std::size_t n_samples);

/// Box-scan minimum combined with leading-coefficient tail bounds outside
/// the box. `tail_rigorous` says whether the out-of-box regimes were truly
/// dominated; when false the value is only the in-box estimate.
struct GapEstimate {
    double value = 0.0;
    bool tail_rigorous = false;
    std::string regime; // which regime produced the minimum
};
GapEstimate gap_estimate(const Symbol& sym, const SghReport& verdict, long long K, double Xi,
                         std::size_t n_samples);

/// Confirms P(xi0) + Q(k0) = 0: exact when xi0 is rational, by a common-root
/// count inside the isolating interval otherwise. A witness for a different
/// operator simply fails the check.
bool witness_verify(const DifferentialOperator& op, const Witness& w);

} // namespace cyl
