#include "msection/ogf.hpp"

namespace msection {

std::string RationalOGF::str() const {
    return "(" + format_poly(num, "x") + ") / (" + format_poly(den, "x") + ")";
}

RationalOGF reduce_ogf(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw std::invalid_argument("reduce_ogf: zero denominator");
    if (num.is_zero()) return {UniPoly(), UniPoly(1)};
    const UniPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_exact_div(num, g);
        den = poly_exact_div(den, g);
    }
    const Rational c = den.coeff(0);
    if (c.is_zero())
        throw std::invalid_argument("reduce_ogf: denominator constant term is zero");
    const Rational inv = c.inverse();
    num *= inv;
    den *= inv;
    return {num, den};
}

RationalOGF ogf_add(const RationalOGF& a, const RationalOGF& b) {
    return reduce_ogf(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalOGF ogf_scale(const RationalOGF& a, const Rational& c) {
    return reduce_ogf(a.num * c, a.den);
}

namespace {

UniPoly subst_pow(const UniPoly& p, long k) {
    UniPoly out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (!p.coeffs()[i].is_zero())
            out.set_coeff(i * static_cast<std::size_t>(k), p.coeffs()[i]);
    return out;
}

}  // namespace

RationalOGF ogf_subst_pow(const RationalOGF& a, long k) {
    if (k < 1) throw std::invalid_argument("ogf_subst_pow: k must be >= 1");
    return reduce_ogf(subst_pow(a.num, k), subst_pow(a.den, k));
}

RationalOGF ogf_mul_xpow(const RationalOGF& a, long k) {
    if (k < 0) throw std::invalid_argument("ogf_mul_xpow: k must be >= 0");
    return reduce_ogf(a.num.shifted(static_cast<std::size_t>(k)), a.den);
}

}  // namespace msection
