#include "cyl/operators.hpp"

#include <sstream>

namespace cyl {

FirstOrderConstant make_first_order_constant(ComplexRational c1, ComplexRational c2, ComplexRational c3) {
    if (c1.is_zero() && c2.is_zero())
        throw ValidationError("first-order operator needs c1 != 0 or c2 != 0");
    return {std::move(c1), std::move(c2), std::move(c3)};
}

SeparablePoly make_separable(CPoly p, CPoly q) {
    if (p.is_constant()) throw ValidationError("separable operator: p must be non-constant");
    if (q.is_constant()) throw ValidationError("separable operator: q must be non-constant");
    bool pr = p.has_real_coeffs(), qr = q.has_real_coeffs();
    if (!pr && !qr) throw ValidationError("separable operator: p or q must have real coefficients");
    return {std::move(p), std::move(q),
            pr && qr ? SeparablePoly::RealSide::Both
                     : (pr ? SeparablePoly::RealSide::P : SeparablePoly::RealSide::Q)};
}

FirstOrderVariable make_first_order_variable(TrigPolynomial a, TrigPolynomial q) {
    if (!a.is_real_valued())
        throw ValidationError("variable-coefficient operator: a(t) must be real-valued");
    return {std::move(a), std::move(q)};
}

bool is_constant_coefficient(const DifferentialOperator& op) {
    return !std::holds_alternative<FirstOrderVariable>(op);
}

namespace {

// "Negative" in the printed sense: the leading printed sign would be '-'.
bool prints_negative(const ComplexRational& z) { return z.re < 0 || (z.re == 0 && z.im < 0); }

// Sum-builder that turns negative coefficients into " - " separators so the
// output stays inside the grammar (no unary minus after '+').
class SumPrinter {
public:
    void add(const ComplexRational& coeff, const char* factor) {
        if (coeff.is_zero()) return;
        ComplexRational c = coeff;
        if (prints_negative(c)) {
            os_ << (first_ ? "-" : " - ");
            c = -c;
        } else if (!first_) {
            os_ << " + ";
        }
        first_ = false;
        std::string body = to_string(c);
        bool parens = c.re != 0 && c.im != 0;
        if (!factor) {
            os_ << (parens ? "(" + body + ")" : body);
            return;
        }
        if (!(c == ComplexRational(1))) os_ << (parens ? "(" + body + ")" : body) << " ";
        os_ << factor;
    }

    void add_raw(const std::string& text) {
        if (!first_) os_ << " + ";
        first_ = false;
        os_ << text;
    }

    std::string str() const { return first_ ? "0" : os_.str(); }

private:
    std::ostringstream os_;
    bool first_ = true;
};

std::string poly_text(const CPoly& p, const std::string& var) {
    SumPrinter out;
    for (int d = p.degree(); d >= 0; --d) {
        ComplexRational c = p.coeff(d);
        if (c.is_zero()) continue;
        if (d == 0) {
            out.add(c, nullptr);
        } else {
            std::string factor = var;
            if (d > 1) factor += "^" + std::to_string(d);
            out.add(c, factor.c_str());
        }
    }
    return out.str();
}

} // namespace

std::string pretty_print(const DifferentialOperator& op) {
    if (const auto* c = std::get_if<FirstOrderConstant>(&op)) {
        SumPrinter out;
        out.add(c->c1, "Dt");
        out.add(c->c2, "Dx");
        out.add(c->c3, nullptr);
        return out.str();
    }
    if (const auto* s = std::get_if<SeparablePoly>(&op))
        return "p(Dx)=" + poly_text(s->p, "Dx") + "; q(Dt)=" + poly_text(s->q, "Dt");
    const auto& v = std::get<FirstOrderVariable>(op);
    SumPrinter out;
    out.add(ComplexRational(1), "Dt");
    if (v.a.is_constant())
        out.add(v.a.mean(), "Dx");
    else
        out.add_raw("(" + v.a.str() + ") Dx");
    if (v.q.is_constant())
        out.add(v.q.mean(), nullptr);
    else
        out.add_raw("(" + v.q.str() + ")");
    return out.str();
}

} // namespace cyl
