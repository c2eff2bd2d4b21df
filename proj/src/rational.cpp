#include "cyl/rational.hpp"

#include <cmath>
#include <sstream>

namespace cyl {

BigInt rational_floor(const Rational& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt q = n / d; // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
}

BigInt rational_ceil(const Rational& r) { return -rational_floor(-r); }

BigInt rational_round(const Rational& r) {
    BigInt fl = rational_floor(r);
    Rational frac = r - Rational(fl);
    if (frac > Rational(1, 2)) return fl + 1;
    if (frac < Rational(1, 2)) return fl;
    return r >= 0 ? fl + 1 : fl; // tie: away from zero
}

Rational distance_to_integers(const Rational& r) {
    Rational frac = r - Rational(rational_floor(r));
    return frac <= Rational(1, 2) ? frac : Rational(1) - frac;
}

Rational sqrt_lower_bound(const Rational& r, const BigInt& scale) {
    if (r < 0) throw ValidationError("sqrt_lower_bound: negative argument");
    if (r == 0) return Rational(0);
    BigInt n = numerator(r), d = denominator(r);
    // sqrt(n/d) = sqrt(n*d)/d; scale for precision.
    BigInt radicand = n * d * scale * scale;
    BigInt root = sqrt(radicand); // floor square root
    return Rational(root, d * scale);
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw ValidationError("simplest_rational_in: empty interval");
    if (lo == hi) return lo;
    BigInt cl = rational_ceil(lo), fh = rational_floor(hi);
    if (cl <= fh) {
        // An integer fits; pick the one closest to zero.
        if (cl <= 0 && 0 <= fh) return Rational(0);
        return cl > 0 ? Rational(cl) : Rational(fh);
    }
    // Same integer part; recurse on the fractional reciprocals.
    BigInt n = rational_floor(lo);
    Rational inner = simplest_rational_in(Rational(1) / (hi - Rational(n)), Rational(1) / (lo - Rational(n)));
    return Rational(n) + Rational(1) / inner;
}

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw ValidationError("rational_from_double: non-finite value");
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(v, &exp); // v = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    BigInt mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << -exp);
    }
    return r;
}

Rational rationalize(double v, const Rational& tol) {
    if (tol < 0) throw ValidationError("rationalize: negative tolerance");
    Rational exact = rational_from_double(v);
    if (tol == 0) return exact;
    return simplest_rational_in(exact - tol, exact + tol);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    Rational r;
    if (slash == std::string_view::npos) {
        if (!all_digits(s)) throw ValidationError("not a rational literal: '" + std::string(text) + "'");
        r = Rational(BigInt(std::string(s)));
    } else {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ValidationError("not a rational literal: '" + std::string(text) + "'");
        BigInt d{std::string(den)};
        if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
        r = Rational(BigInt(std::string(num)), d);
    }
    return neg ? Rational(-r) : r;
}

Rational parse_rational_or_decimal(std::string_view text) {
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return parse_rational(text);
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    dot = s.find('.');
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
        throw ValidationError("not a decimal literal: '" + std::string(text) + "'");
    Rational r = ip.empty() ? Rational(0) : Rational(BigInt(std::string(ip)));
    if (!fp.empty()) {
        BigInt den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        r += Rational(BigInt(std::string(fp)), den);
    }
    return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    Rational n2 = b.norm2();
    if (n2 == 0) throw ValidationError("complex division by zero");
    ComplexRational prod = a * b.conj();
    return {prod.re / n2, prod.im / n2};
}

std::string to_string(const ComplexRational& z) {
    if (z.is_zero()) return "0";
    std::ostringstream os;
    if (z.re != 0) os << z.re;
    if (z.im != 0) {
        if (z.im > 0 && z.re != 0) os << "+";
        if (z.im == 1)
            os << "i";
        else if (z.im == -1)
            os << "-i";
        else
            os << z.im << "i";
    }
    return os.str();
}

} // namespace cyl
