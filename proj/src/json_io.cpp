#include "cyl/json_io.hpp"

namespace cyl {

namespace {

Json int_or_string(const BigInt& n) {
    static const BigInt lo = BigInt(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
    if (n >= lo && n <= hi) return n.convert_to<std::int64_t>();
    return n.str();
}

} // namespace

Json bigint_to_json(const BigInt& n) { return int_or_string(n); }

Json rational_to_json(const Rational& r) {
    return Json{{"num", int_or_string(numerator(r))}, {"den", int_or_string(denominator(r))}};
}

Json complex_rational_to_json(const ComplexRational& z) {
    return Json{{"re", rational_to_json(z.re)}, {"im", rational_to_json(z.im)}};
}

Json grid_to_json(const CylinderGrid& g) {
    return Json{{"n_t", g.n_t}, {"n_x", g.n_x}, {"X", g.X}};
}

Json sgh_report_to_json(const SghReport& r) {
    Json j;
    j["verdict"] = r.is_sgh() ? "SGH" : "NotSGH";
    switch (r.method) {
        case SghReport::Method::FirstOrderClosedForm: j["method"] = "first-order-closed-form"; break;
        case SghReport::Method::SeparablePolyDecision: j["method"] = "separable-poly-decision"; break;
        case SghReport::Method::ConjugatedToConstant: j["method"] = "conjugated-to-constant"; break;
    }
    if (r.witness) {
        j["witness"] = Json{{"k", bigint_to_json(r.witness->k)},
                            {"xi_lo", rational_to_json(r.witness->xi_lo)},
                            {"xi_hi", rational_to_json(r.witness->xi_hi)},
                            {"xi_approx", r.witness->xi_approx()}};
    } else {
        j["witness"] = nullptr;
    }
    if (r.gap) {
        Json g = rational_to_json(*r.gap);
        g["approx"] = to_double(*r.gap);
        g["estimate"] = r.gap_is_estimate;
        j["gap"] = g;
    } else {
        j["gap"] = nullptr;
    }
    if (r.normal_form) {
        j["normal_form"] = Json{{"c1", complex_rational_to_json(r.normal_form->c1)},
                                {"c2", complex_rational_to_json(r.normal_form->c2)},
                                {"c3", complex_rational_to_json(r.normal_form->c3)}};
    } else {
        j["normal_form"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

Json certificate_to_json(const DecayCertificate& c) {
    // Rows of mixed/torus certificates are k-modes; report the k value.
    // Line certificates have t-rows, reported as the raw row index.
    int argmax_k = c.type == CertificateType::Line ? c.argmax_row : c.grid.k_of_row(c.argmax_row);
    Json j{{"type", std::string(certificate_type_name(c.type))},
           {"N", c.N},
           {"beta", c.beta},
           {"C", c.C},
           {"argmax_k", argmax_k},
           {"argmax_xi_index", c.argmax_col},
           {"grid", grid_to_json(c.grid)}};
    if (c.type == CertificateType::Line) j["alpha"] = c.alpha;
    return j;
}

} // namespace cyl
