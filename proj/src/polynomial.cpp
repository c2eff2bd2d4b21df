#include "cyl/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cyl {

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::monomial(int degree, Rational coeff) {
    if (degree < 0) throw ValidationError("monomial: negative degree");
    if (coeff == 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = std::move(coeff);
    return RatPoly(std::move(c));
}

const Rational& RatPoly::leading() const {
    if (is_zero()) throw ValidationError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RatPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(d));
}

void RatPoly::eval_interval(const Rational& lo, const Rational& hi, Rational& out_lo, Rational& out_hi) const {
    // Interval Horner: acc := acc*x + c with interval acc and interval x.
    Rational alo(0), ahi(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        Rational mlo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rational mhi = std::max(std::max(p1, p2), std::max(p3, p4));
        alo = mlo + *it;
        ahi = mhi + *it;
    }
    out_lo = alo;
    out_hi = ahi;
}

Rational RatPoly::root_bound() const {
    if (degree() < 1) return Rational(1);
    Rational maxratio(0);
    const Rational lead = rational_abs(c_.back());
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) maxratio = std::max(maxratio, rational_abs(c_[i]) / lead);
    return Rational(1) + maxratio; // Cauchy: |root| < 1 + max|c_i/c_d|
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<Rational> c = a.c_;
    for (auto& v : c) v = -v;
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rational& s, const RatPoly& a) {
    if (s == 0) return {};
    std::vector<Rational> c = a.c_;
    for (auto& v : c) v *= s;
    return RatPoly(std::move(c));
}

void RatPoly::divmod(const RatPoly& d, RatPoly& q, RatPoly& r) const {
    if (d.is_zero()) throw ValidationError("polynomial division by zero");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo;
    int dd = d.degree();
    if (degree() >= dd) quo.assign(static_cast<std::size_t>(degree() - dd) + 1, Rational(0));
    for (int i = degree(); i >= dd; --i) {
        Rational& top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        Rational f = top / d.c_.back();
        std::size_t shift = static_cast<std::size_t>(i) - static_cast<std::size_t>(dd);
        quo[shift] = f;
        for (int j = 0; j <= dd; ++j) rem[shift + static_cast<std::size_t>(j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    q = RatPoly(std::move(quo));
    r = RatPoly(std::move(rem));
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Rational a = rational_abs(v);
        if (i == 0 || a != 1) os << a;
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    auto monic = [](RatPoly p) {
        if (p.is_zero()) return p;
        return (Rational(1) / p.leading()) * p;
    };
    while (!b.is_zero()) {
        RatPoly q, r;
        a.divmod(b, q, r);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() <= 1) return p;
    RatPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    RatPoly q, r;
    p.divmod(g, q, r);
    return q;
}

namespace {

int sgn(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

} // namespace

SturmChain::SturmChain(const RatPoly& p) : sf_(squarefree_part(p)) {
    if (sf_.is_zero()) throw ValidationError("Sturm chain of the zero polynomial");
    bound_ = sf_.root_bound();
    chain_.push_back(sf_);
    if (sf_.degree() >= 1) {
        chain_.push_back(sf_.derivative());
        while (!chain_.back().is_zero() && chain_.back().degree() >= 1) {
            RatPoly q, r;
            chain_[chain_.size() - 2].divmod(chain_.back(), q, r);
            if (r.is_zero()) break;
            // Negate and rescale by a positive constant to tame growth.
            RatPoly next = -r;
            next = (Rational(1) / rational_abs(next.leading())) * next;
            chain_.push_back(std::move(next));
        }
    }
}

int SturmChain::sign_variations(const Rational& x) const {
    int count = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    if (a > b) throw ValidationError("count_roots: reversed interval");
    if (a == b) return 0;
    return sign_variations(a) - sign_variations(b);
}

int SturmChain::count_all_roots() const {
    if (sf_.degree() == 0) return 0;
    return count_roots(-bound_, bound_);
}

std::vector<RootInterval> isolate_real_roots(const RatPoly& p) {
    if (p.is_zero()) throw ValidationError("isolate_real_roots: zero polynomial");
    if (p.degree() == 0) return {};
    SturmChain chain(p);
    std::vector<RootInterval> out;
    // Worklist bisection over (lo, hi] starting from the strict root bound;
    // roots cannot sit at +-bound, so the half-open convention loses nothing.
    struct Seg {
        Rational lo, hi;
        int count;
    };
    std::vector<Seg> work{{-chain.bound(), chain.bound(), chain.count_roots(-chain.bound(), chain.bound())}};
    while (!work.empty()) {
        Seg s = std::move(work.back());
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            // Pull exact rational endpoints in when cheap: the root may be hi.
            if (chain.squarefree().eval(s.hi) == 0)
                out.push_back({s.hi, s.hi});
            else
                out.push_back({s.lo, s.hi});
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        int left = chain.count_roots(s.lo, mid);
        work.push_back({s.lo, mid, left});
        work.push_back({mid, s.hi, s.count - left});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

int count_real_roots(const RatPoly& p) {
    if (p.is_zero()) throw ValidationError("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    return SturmChain(p).count_all_roots();
}

bool has_real_root(const RatPoly& p) {
    if (p.is_zero()) return true; // identically zero
    if (p.degree() == 0) return false;
    if (p.degree() % 2 == 1) return true;
    return count_real_roots(p) > 0;
}

void refine_root(const SturmChain& chain, RootInterval& iv, const Rational& width) {
    while (!iv.exact() && iv.hi - iv.lo > width) {
        Rational mid = iv.midpoint();
        if (chain.squarefree().eval(mid) == 0) {
            iv.lo = iv.hi = mid;
            return;
        }
        if (chain.count_roots(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
}

std::vector<RootInterval> isolate_real_roots(const RatPoly& p, const Rational& width) {
    auto roots = isolate_real_roots(p);
    if (roots.empty()) return roots;
    SturmChain chain(p);
    for (auto& r : roots) refine_root(chain, r, width);
    return roots;
}

CPoly::CPoly(const std::vector<ComplexRational>& coeffs) {
    std::vector<Rational> r(coeffs.size()), i(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        r[n] = coeffs[n].re;
        i[n] = coeffs[n].im;
    }
    re = RatPoly(std::move(r));
    im = RatPoly(std::move(i));
}

std::string CPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        ComplexRational c = coeff(d);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        bool needs_parens = c.re != 0 && c.im != 0;
        std::string cs = to_string(c);
        if (d > 0) {
            if (c == ComplexRational(1)) {
                // coefficient 1 prints bare
            } else if (needs_parens) {
                os << "(" << cs << ")*";
            } else {
                os << cs << "*";
            }
            os << var;
            if (d > 1) os << "^" << d;
        } else {
            os << (needs_parens ? "(" + cs + ")" : cs);
        }
        first = false;
    }
    return os.str();
}

} // namespace cyl
