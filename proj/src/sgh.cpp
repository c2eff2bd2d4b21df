#include "cyl/sgh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyl/parallel.hpp"

namespace cyl {

namespace {

CPoly cpoly_linear(const ComplexRational& c0, const ComplexRational& c1) {
    return CPoly({c0, c1});
}

RatPoly plus_constant(const RatPoly& p, const Rational& c) {
    return p + RatPoly::constant(c);
}

Rational sum_abs_below_leading(const RatPoly& p) {
    Rational s(0);
    for (int i = 0; i < p.degree(); ++i) s += rational_abs(p.coeff(i));
    return s;
}

/// Beyond this positive integer, p is sign-constant and |p| is strictly
/// increasing in |k| on each side (all roots of p and p' lie inside).
BigInt monotone_bound(const RatPoly& p) {
    Rational b = p.root_bound();
    if (p.degree() >= 2) b = std::max(b, p.derivative().root_bound());
    return rational_ceil(std::max(b, Rational(1)));
}

/// Lower bound of |p| on |x| >= T (valid when positive and T >= 1):
/// |p(x)| >= T^{d-1} (|lead| T - sum of lower |coeffs|).
double poly_tail_lower_bound(const RatPoly& p, double T) {
    if (p.degree() < 1 || T < 1.0) return -1.0;
    double lead = std::abs(to_double(p.leading()));
    double S = to_double(sum_abs_below_leading(p));
    return std::pow(T, p.degree() - 1) * (lead * T - S);
}

Rational interval_abs_upper(const RatPoly& p, const Rational& lo, const Rational& hi) {
    Rational a, b;
    p.eval_interval(lo, hi, a, b);
    return std::max(rational_abs(a), rational_abs(b));
}

constexpr long long kEnumerationCap = 4'000'000;

/// All integers k with pred(q(k)) true, where pred defines a set that is
/// eventually-false in both directions once |k| passes the monotone bound.
/// Visits ascending |k| (0, 1, -1, 2, -2, ...) via two monotone sweeps.
template <typename Pred>
std::vector<BigInt> enumerate_candidates(const RatPoly& q, Pred&& pred) {
    if (q.degree() < 1) throw ValidationError("enumerate_candidates: q must be non-constant");
    BigInt mono = monotone_bound(q);
    std::vector<BigInt> out;
    long long steps = 0;
    for (int dir : {+1, -1}) {
        BigInt k = dir > 0 ? BigInt(0) : BigInt(-1);
        while (true) {
            if (++steps > kEnumerationCap)
                throw Error("separable decision: integer enumeration exceeded the safety cap");
            bool hit = pred(q.eval(Rational(k)));
            if (hit) out.push_back(k);
            BigInt mag = k < 0 ? BigInt(-k) : k;
            if (!hit && mag > mono) break; // |q| grows monotonically from here on
            k += dir;
        }
    }
    std::sort(out.begin(), out.end(), [](const BigInt& a, const BigInt& b) {
        BigInt aa = a < 0 ? BigInt(-a) : a, ab = b < 0 ? BigInt(-b) : b;
        return aa != ab ? aa < ab : a > b; // ascending |k|, positive first
    });
    return out;
}

SghReport not_sgh(SghReport::Method method, Witness w, std::vector<std::string> notes = {}) {
    SghReport r;
    r.verdict = SghReport::Verdict::NotSgh;
    r.method = method;
    r.witness = std::move(w);
    r.notes = std::move(notes);
    return r;
}

SghReport sgh_with_gap(SghReport::Method method, Rational gap, std::vector<std::string> notes = {}) {
    if (!(gap > 0)) throw InconsistencyAlarm("SGH verdict with non-positive gap");
    SghReport r;
    r.verdict = SghReport::Verdict::Sgh;
    r.method = method;
    r.gap = std::move(gap);
    r.notes = std::move(notes);
    return r;
}

} // namespace

Symbol symbol_of(const DifferentialOperator& op) {
    if (const auto* c = std::get_if<FirstOrderConstant>(&op)) {
        // form = c1 k + c2 xi - i c3; sigma = i * form is what L does to e^{i(kt+xi x)}.
        ComplexRational minus_i_c3 = ComplexRational(Rational(0), Rational(-1)) * c->c3;
        return Symbol{cpoly_linear(ComplexRational(), c->c2), cpoly_linear(minus_i_c3, c->c1)};
    }
    if (const auto* s = std::get_if<SeparablePoly>(&op)) return Symbol{s->p, s->q};
    throw ValidationError("symbol_of: variable-coefficient operator; conjugate to its normal form first");
}

SghReport decide_sgh_first_order(const ComplexRational& c1, const ComplexRational& c2, const ComplexRational& c3) {
    if (c1.is_zero() && c2.is_zero()) throw ValidationError("decide_sgh_first_order: c1 = c2 = 0");
    const Rational &a1 = c1.re, &b1 = c1.im;
    const Rational &a2 = c2.re, &b2 = c2.im;
    const Rational &a3 = c3.re, &b3 = c3.im;
    const auto method = SghReport::Method::FirstOrderClosedForm;

    // c1 k + c2 xi - i c3 = 0 splits into
    //   a1 k + a2 xi = -b3   (real part)
    //   b1 k + b2 xi =  a3   (imaginary part)
    Rational D = a1 * b2 - a2 * b1;

    // Exact infimum of |form|^2 over Z x R, for the SGH exits.
    auto exact_gap = [&]() -> Rational {
        Rational gap2;
        if (a2 != 0 || b2 != 0) {
            // For fixed k, min over xi of |form|^2 is (D k + E)^2 / |c2|^2
            // by the Lagrange identity; minimize that line over integers.
            Rational E = b2 * b3 + a2 * a3;
            Rational denom = a2 * a2 + b2 * b2;
            if (D == 0) {
                gap2 = (E * E) / denom;
            } else {
                Rational t = -E / D;
                Rational best;
                bool have = false;
                for (const BigInt& k : {rational_floor(t), rational_ceil(t)}) {
                    Rational v = D * Rational(k) + E;
                    Rational cand = (v * v) / denom;
                    if (!have || cand < best) best = cand, have = true;
                }
                gap2 = best;
            }
        } else {
            // xi absent: minimize the exact quadratic (a1 k + b3)^2 + (b1 k - a3)^2.
            Rational denom = a1 * a1 + b1 * b1;
            Rational kv = (b1 * a3 - a1 * b3) / denom;
            Rational best;
            bool have = false;
            for (const BigInt& k : {rational_floor(kv), rational_ceil(kv)}) {
                Rational rk(k);
                Rational u = a1 * rk + b3, v = b1 * rk - a3;
                Rational cand = u * u + v * v;
                if (!have || cand < best) best = cand, have = true;
            }
            gap2 = best;
        }
        return sqrt_lower_bound(gap2, BigInt(1000000000000LL));
    };

    auto verify_witness = [&](const Rational& k, const Rational& xi) {
        ComplexRational val = c1 * ComplexRational(k) + c2 * ComplexRational(xi) +
                              ComplexRational(Rational(0), Rational(-1)) * c3;
        if (!val.is_zero()) throw InconsistencyAlarm("first-order witness fails exact verification");
    };

    // Solution set of the 2x2 rational system: empty, a point, or a line.
    if (D != 0) {
        Rational kstar = (-b3 * b2 - a2 * a3) / D;
        Rational xistar = (a1 * a3 + b1 * b3) / D;
        if (is_integer(kstar)) {
            verify_witness(kstar, xistar);
            return not_sgh(method, Witness{numerator(kstar), xistar, xistar},
                           {"unique symbol zero at an integer k"});
        }
        return sgh_with_gap(method, exact_gap(), {"unique candidate k = " + to_string(kstar) + " is not an integer"});
    }

    // Degenerate system: reduce to one effective equation alpha k + beta xi = gamma.
    bool row1_zero = a1 == 0 && a2 == 0;
    bool row2_zero = b1 == 0 && b2 == 0;
    Rational alpha, beta, gamma;
    if (row1_zero) {
        if (b3 != 0) return sgh_with_gap(method, exact_gap(), {"real part equation is infeasible"});
        alpha = b1, beta = b2, gamma = a3;
    } else if (row2_zero) {
        if (a3 != 0) return sgh_with_gap(method, exact_gap(), {"imaginary part equation is infeasible"});
        alpha = a1, beta = a2, gamma = -b3;
    } else {
        // Two proportional nonzero rows; check right-hand-side consistency.
        Rational lambda = a1 != 0 ? b1 / a1 : b2 / a2;
        if (a3 != lambda * (-b3))
            return sgh_with_gap(method, exact_gap(), {"the two real equations are parallel lines"});
        alpha = a1, beta = a2, gamma = -b3;
    }

    if (beta != 0) {
        // Non-vertical zero line: every integer k lifts to a real xi.
        Rational xi0 = gamma / beta;
        verify_witness(Rational(0), xi0);
        return not_sgh(method, Witness{BigInt(0), xi0, xi0}, {"symbol zero line covers every integer k"});
    }
    Rational k0 = gamma / alpha;
    if (is_integer(k0)) {
        verify_witness(k0, Rational(0));
        return not_sgh(method, Witness{numerator(k0), Rational(0), Rational(0)},
                       {"symbol vanishes on the vertical line at integer k (any xi); witness picks xi = 0"});
    }
    return sgh_with_gap(method, exact_gap(), {"vertical zero line at non-integer k = " + to_string(k0)});
}

namespace {

/// Witness from the first real root of poly (which must have one) at mode k.
Witness witness_from_root(const BigInt& k, const RatPoly& poly) {
    auto roots = isolate_real_roots(poly, Rational(1, BigInt(1) << 40));
    if (roots.empty()) throw InconsistencyAlarm("expected a real root for the separable witness");
    return Witness{k, roots.front().lo, roots.front().hi};
}

} // namespace

SghReport decide_sgh_separable(const SeparablePoly& op) {
    const auto method = SghReport::Method::SeparablePolyDecision;
    const CPoly& P = op.p;
    const CPoly& Q = op.q;
    if (P.is_constant() || Q.is_constant())
        throw ValidationError("decide_sgh_separable: p and q must both be non-constant");

    SghReport report;
    if (Q.has_real_coeffs()) {
        const RatPoly& Qr = Q.re;
        if (!P.im.is_zero()) {
            // q real, p genuinely complex: zeros need Im P(xi) = 0 and
            // Re P(xi) + Q(k) = 0 simultaneously.
            auto im_roots = isolate_real_roots(P.im, Rational(1, 16));
            if (im_roots.empty()) {
                report = sgh_with_gap(method, Rational(1), {"Im P has no real root"});
            } else {
                // Bound |Re P| over the root locations; only integers with
                // |Q(k)| below that bound can pair with a root.
                Rational B(0);
                for (const auto& iv : im_roots) B = std::max(B, interval_abs_upper(P.re, iv.lo, iv.hi));
                bool found = false;
                for (const BigInt& k :
                     enumerate_candidates(Qr, [&](const Rational& v) { return rational_abs(v) <= B; })) {
                    RatPoly shifted = plus_constant(P.re, Qr.eval(Rational(k)));
                    RatPoly g = poly_gcd(P.im, shifted);
                    if (g.degree() >= 1 && has_real_root(g)) {
                        report = not_sgh(method, witness_from_root(k, g),
                                         {"common real root of Im P and Re P + Q(k)"});
                        found = true;
                        break;
                    }
                }
                if (!found)
                    report = sgh_with_gap(method, Rational(1),
                                          {"no integer k pairs Q(k) with a real root of Im P"});
            }
        } else {
            // Both sides real: does the range of P over R meet {-Q(k)}?
            RatPoly Pr = P.re;
            RatPoly Qw = Qr;
            if (Pr.degree() % 2 == 1) {
                // Odd degree: P is surjective over R.
                return not_sgh(method, witness_from_root(BigInt(0), plus_constant(Pr, Qw.eval(Rational(0)))),
                               {"P has odd degree, so its range is all of R"});
            }
            if (Pr.leading() < 0) {
                // Mirror so the range of P is [min P, infinity).
                Pr = -Pr;
                Qw = -Qw;
            }
            // Rational bracket [m_lb, m_ub] around min P via critical points.
            auto crit = isolate_real_roots(Pr.derivative(), Rational(1, 16));
            Rational m_lb, m_ub;
            bool have = false;
            for (const auto& iv : crit) {
                Rational lo, hi;
                Pr.eval_interval(iv.lo, iv.hi, lo, hi);
                if (!have) {
                    m_lb = lo, m_ub = hi, have = true;
                } else {
                    m_lb = std::min(m_lb, lo);
                    m_ub = std::min(m_ub, hi);
                }
            }
            if (!have) throw InconsistencyAlarm("even-degree polynomial without critical points");

            bool q_bounded_below = Qw.degree() % 2 == 0 && Qw.leading() > 0;
            if (q_bounded_below) {
                // Only finitely many k can reach Q(k) <= -min P <= -m_lb.
                bool found = false;
                for (const BigInt& k : enumerate_candidates(Qw, [&](const Rational& v) { return v <= -m_lb; })) {
                    RatPoly shifted = plus_constant(Pr, Qw.eval(Rational(k)));
                    if (has_real_root(shifted)) {
                        report = not_sgh(method, witness_from_root(k, shifted), {"range of P reaches -Q(k)"});
                        found = true;
                        break;
                    }
                }
                if (!found)
                    report = sgh_with_gap(method, Rational(1), {"no integer k brings -Q(k) into the range of P"});
            } else {
                // Q is unbounded below over Z: a zero always exists. Walk
                // outward; any k with Q(k) <= -m_ub is guaranteed to work,
                // and the growth bound says how far out that can be.
                Rational target = rational_abs(m_ub) + 1;
                Rational lead = rational_abs(Qw.leading());
                BigInt walk_bound = rational_ceil(std::max((target + sum_abs_below_leading(Qw)) / lead,
                                                           std::max(Qw.root_bound(), Rational(1)))) +
                                    1;
                for (BigInt mag(0); mag <= walk_bound; ++mag) {
                    for (const BigInt& k : {mag, BigInt(-mag)}) {
                        RatPoly shifted = plus_constant(Pr, Qw.eval(Rational(k)));
                        if (has_real_root(shifted))
                            return not_sgh(method, witness_from_root(k, shifted),
                                           {"Q is unbounded below over the integers"});
                        if (mag == 0) break;
                    }
                }
                throw InconsistencyAlarm("unbounded-below Q produced no real root");
            }
        }
    } else {
        // p real, q complex: zeros need Im Q(k) = 0 at an integer k and
        // P(xi) = -Re Q(k) solvable over R.
        if (!P.has_real_coeffs())
            throw ValidationError("decide_sgh_separable: neither side has real coefficients");
        std::vector<BigInt> integer_roots;
        for (auto& iv : isolate_real_roots(Q.im, Rational(1, 4)))
            for (BigInt n = rational_ceil(iv.lo); n <= rational_floor(iv.hi); ++n)
                if (Q.im.eval(Rational(n)) == 0) integer_roots.push_back(n);
        bool found = false;
        for (const BigInt& k : integer_roots) {
            RatPoly shifted = plus_constant(P.re, Q.re.eval(Rational(k)));
            if (has_real_root(shifted)) {
                report = not_sgh(method, witness_from_root(k, shifted),
                                 {"integer root of Im Q with P reaching -Re Q(k)"});
                found = true;
                break;
            }
        }
        if (!found)
            report = sgh_with_gap(method, Rational(1),
                                  integer_roots.empty()
                                      ? std::vector<std::string>{"Im Q has no integer root"}
                                      : std::vector<std::string>{"no integer root of Im Q pairs with the range of P"});
    }

    if (!report.is_sgh()) return report;

    // Replace the placeholder gap by the box-scan estimate.
    Symbol sym{P, Q};
    GapEstimate est = gap_estimate(sym, report, 64, 64.0, 20000);
    report.gap = std::max(rational_from_double(est.value) * Rational(999, 1000), Rational(1, BigInt(1) << 60));
    report.gap_is_estimate = true;
    report.notes.push_back(est.tail_rigorous
                               ? "gap is a box-scan estimate; out-of-box regimes dominated by leading terms"
                               : "gap is a box-scan estimate only; tail regimes not certified for this box");
    return report;
}

SghReport decide_sgh(const DifferentialOperator& op) {
    if (const auto* c = std::get_if<FirstOrderConstant>(&op)) return decide_sgh_first_order(c->c1, c->c2, c->c3);
    if (const auto* s = std::get_if<SeparablePoly>(&op)) return decide_sgh_separable(*s);
    const auto& v = std::get<FirstOrderVariable>(op);
    NormalFormBundle bundle = compute_normal_form(v.a, v.q);
    SghReport rep = decide_sgh_first_order(bundle.l0.c1, bundle.l0.c2, bundle.l0.c3);
    rep.method = SghReport::Method::ConjugatedToConstant;
    rep.normal_form = bundle.l0;
    rep.notes.insert(rep.notes.begin(), "decided through the mean-coefficient normal form L0");
    return rep;
}

ScanResult brute_force_min_symbol(const Symbol& sym, long long K, double Xi, std::size_t n_samples) {
    if (K < 0 || !(Xi > 0.0) || n_samples < 2)
        throw ValidationError("brute_force_min_symbol: need K >= 0, Xi > 0, n >= 2");
    // Plain double Horner scan. This is the independent cross-check, so it
    // deliberately shares nothing with the exact decision path.
    std::vector<double> pre, pim, qre, qim;
    auto dump = [](const RatPoly& p, std::vector<double>& out) {
        out.assign(static_cast<std::size_t>(std::max(p.degree() + 1, 1)), 0.0);
        for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(i)] = to_double(p.coeff(i));
    };
    dump(sym.p.re, pre);
    dump(sym.p.im, pim);
    dump(sym.q.re, qre);
    dump(sym.q.im, qim);
    auto horner = [](const std::vector<double>& c, double x) {
        double acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };

    const std::size_t nk = static_cast<std::size_t>(2 * K + 1);
    std::vector<ScanResult> per_k(nk);
    // k rows are heavy (n_samples evaluations each): parallelize even a few
    parallel_chunks(
        nk,
        [&](std::size_t lo, std::size_t hi) {
            for (std::size_t idx = lo; idx < hi; ++idx) {
                long long k = static_cast<long long>(idx) - K;
                double qr = horner(qre, static_cast<double>(k));
                double qi = horner(qim, static_cast<double>(k));
                ScanResult best{std::numeric_limits<double>::infinity(), k, 0.0};
                for (std::size_t i = 0; i < n_samples; ++i) {
                    double xi = -Xi + 2.0 * Xi * static_cast<double>(i) / static_cast<double>(n_samples - 1);
                    double re = horner(pre, xi) + qr;
                    double im = horner(pim, xi) + qi;
                    double v = re * re + im * im;
                    if (v < best.min_value) {
                        best.min_value = v;
                        best.argmin_xi = xi;
                    }
                }
                per_k[idx] = best;
            }
        },
        2);
    ScanResult best = per_k.front();
    for (const auto& r : per_k)
        if (r.min_value < best.min_value) best = r;
    best.min_value = std::sqrt(best.min_value);
    return best;
}

GapEstimate gap_estimate(const Symbol& sym, const SghReport& verdict, long long K, double Xi,
                         std::size_t n_samples) {
    if (!verdict.is_sgh()) throw ValidationError("gap_estimate: verdict must be SGH");
    ScanResult scan = brute_force_min_symbol(sym, K, Xi, n_samples);
    if (scan.min_value < 1e-12)
        throw InconsistencyAlarm("gap_estimate: SGH verdict but the scan found a near-zero symbol value");

    GapEstimate est{scan.min_value, false, "box scan"};

    // First-order forms carry an exact closed-form gap. It is global, so it
    // supersedes any finite box.
    if (sym.p.degree() <= 1 && sym.q.degree() <= 1 && verdict.gap && !verdict.gap_is_estimate) {
        double exact = to_double(*verdict.gap);
        if (exact < est.value) {
            est.value = exact;
            est.regime = "closed form";
        }
        est.tail_rigorous = true;
        return est;
    }

    // Out-of-box regimes, by the same shape split as the decision. Each tail
    // uses leading-term domination; rigorous only if every piece is positive.
    bool rigorous = true;
    auto consider = [&](double bound, const char* name) {
        if (bound <= 0.0) {
            rigorous = false;
            return;
        }
        if (bound < est.value) {
            est.value = bound;
            est.regime = name;
        }
    };

    if (sym.q.has_real_coeffs() && !sym.p.im.is_zero()) {
        // |form| >= |Im P(xi)| for |xi| > Xi, any k.
        consider(poly_tail_lower_bound(sym.p.im, Xi), "xi tail via Im P");
        // |form| >= |Q(k)| - max |Re P| on the xi box, for |k| > K.
        Rational M = interval_abs_upper(sym.p.re, rational_from_double(-Xi), rational_from_double(Xi));
        consider(poly_tail_lower_bound(sym.q.re, static_cast<double>(K)) - to_double(M), "k tail via Q");
    } else if (sym.q.has_real_coeffs() && sym.p.has_real_coeffs()) {
        RatPoly Pr = sym.p.re, Qr = sym.q.re;
        // An SGH pair of real sides must be bounded on the same side; mirror
        // the doubly-negative case so both grow upward.
        if (Pr.degree() % 2 == 0 && Pr.leading() < 0 && Qr.degree() % 2 == 0 && Qr.leading() < 0) {
            Pr = -Pr;
            Qr = -Qr;
        }
        bool p_up = Pr.degree() % 2 == 0 && Pr.leading() > 0;
        bool q_up = Qr.degree() % 2 == 0 && Qr.leading() > 0;
        if (p_up && q_up) {
            double pmin_box = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < 512; ++i) {
                double xi = -Xi + 2.0 * Xi * static_cast<double>(i) / 511.0;
                pmin_box = std::min(pmin_box, Pr.eval(xi));
            }
            double qmin_box = std::numeric_limits<double>::infinity();
            for (long long k = -K; k <= K; ++k) qmin_box = std::min(qmin_box, Qr.eval(static_cast<double>(k)));
            // Outside in xi: form >= (tail of P) + min Q; and symmetrically.
            consider(poly_tail_lower_bound(Pr, Xi) + std::min(qmin_box, 0.0), "xi tail, P grows");
            consider(poly_tail_lower_bound(Qr, static_cast<double>(K)) + std::min(pmin_box, 0.0), "k tail, Q grows");
        } else {
            rigorous = false; // mixed growth directions cannot be SGH; leave box-only
        }
    } else {
        // p real, q complex: |form| >= |Im Q(k)| for |k| > K; for |k| <= K,
        // |form| >= |P(xi)| - max |Re Q(k)| when |xi| > Xi.
        consider(poly_tail_lower_bound(sym.q.im, static_cast<double>(K)), "k tail via Im Q");
        double maxq = 0.0;
        for (long long k = -K; k <= K; ++k) maxq = std::max(maxq, std::abs(sym.q.re.eval(static_cast<double>(k))));
        consider(poly_tail_lower_bound(sym.p.re, Xi) - maxq, "xi tail via P");
    }

    est.tail_rigorous = rigorous;
    return est;
}

bool witness_verify(const DifferentialOperator& op, const Witness& w) {
    Symbol sym;
    if (std::holds_alternative<FirstOrderVariable>(op)) {
        const auto& v = std::get<FirstOrderVariable>(op);
        sym = symbol_of(DifferentialOperator{compute_normal_form(v.a, v.q).l0});
    } else {
        sym = symbol_of(op);
    }
    Rational kq(w.k);
    if (w.exact()) return sym.form(kq, w.xi_lo).is_zero();

    // Common real root of Re form and Im form (in xi, at fixed k) inside the
    // isolating interval.
    RatPoly fre = plus_constant(sym.p.re, sym.q.re.eval(kq));
    RatPoly fim = plus_constant(sym.p.im, sym.q.im.eval(kq));
    RatPoly g;
    if (fre.is_zero() && fim.is_zero()) return true;
    if (fre.is_zero())
        g = fim;
    else if (fim.is_zero())
        g = fre;
    else
        g = poly_gcd(fre, fim);
    if (g.degree() < 1) return false;
    if (g.eval(w.xi_lo) == 0) return true; // tolerate closed-left intervals
    return SturmChain(g).count_roots(w.xi_lo, w.xi_hi) >= 1;
}

} // namespace cyl
