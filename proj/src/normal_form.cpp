#include "cyl/normal_form.hpp"

namespace cyl {

NormalFormBundle compute_normal_form(const TrigPolynomial& a, const TrigPolynomial& q) {
    if (!a.is_real_valued()) throw ValidationError("compute_normal_form: a(t) must be real-valued");
    NormalFormBundle b;
    b.a0 = a.mean(); // real: real-valuedness forces conj(mean) == mean
    b.q0 = q.mean();
    b.A = a.zero_mean_antiderivative();
    b.Q = q.zero_mean_antiderivative();
    b.l0 = make_first_order_constant(ComplexRational(1), b.a0, b.q0);
    return b;
}

} // namespace cyl
