#include "msection/series.hpp"

#include <stdexcept>

namespace msection {

SeriesPrefix expand(const RationalOGF& ogf, long n) {
    if (n < 1) throw std::invalid_argument("expand: need at least one term");
    const Rational den0 = ogf.den.coeff(0);
    if (den0.is_zero()) throw std::domain_error("expand: denominator constant term is zero");

    SeriesPrefix out;
    out.source = "expand:" + ogf.str();
    out.coeffs.resize(static_cast<std::size_t>(n));
    const auto dden = static_cast<std::size_t>(ogf.den.degree());
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
        Rational acc = ogf.num.coeff(i);
        for (std::size_t k = 1; k <= dden && k <= i; ++k)
            acc -= ogf.den.coeff(k) * out.coeffs[i - k];
        out.coeffs[i] = acc / den0;
    }
    return out;
}

SeriesPrefix section_terms(const SeriesPrefix& prefix, long m, long l) {
    if (m < 1) throw std::invalid_argument("section_terms: m must be >= 1");
    if (l < 0 || l >= m) throw std::invalid_argument("section_terms: l out of range [0, m)");
    SeriesPrefix out;
    out.source = prefix.source + " [" + std::to_string(m) + "n+" + std::to_string(l) + "]";
    for (std::size_t i = static_cast<std::size_t>(l); i < prefix.coeffs.size();
         i += static_cast<std::size_t>(m))
        out.coeffs.push_back(prefix.coeffs[i]);
    return out;
}

bool certify_ogf(const RationalOGF& ogf, const SeriesPrefix& prefix) {
    const std::size_t n = prefix.coeffs.size();
    // den * series, truncated to x^n, must equal num mod x^n
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc(0);
        const auto dden = static_cast<std::size_t>(ogf.den.degree());
        for (std::size_t k = 0; k <= dden && k <= i; ++k)
            acc += ogf.den.coeff(k) * prefix.coeffs[i - k];
        if (acc != ogf.num.coeff(i)) return false;
    }
    // coefficients of num beyond the prefix horizon are unchecked by
    // construction (mod x^n comparison)
    return true;
}

std::vector<UniPoly> expand_bivariate(const BiPoly& num, const BiPoly& den, long n) {
    if (n < 1) throw std::invalid_argument("expand_bivariate: need at least one term");
    const UniPoly den0 = den.coeff(0);
    if (den0.degree() != 0)
        throw std::domain_error("expand_bivariate: denominator x-constant must be a nonzero rational");
    const Rational c0 = den0.coeff(0);
    const Rational inv = c0.inverse();

    std::vector<UniPoly> out(static_cast<std::size_t>(n));
    const auto dden = static_cast<std::size_t>(den.degree());
    for (std::size_t i = 0; i < out.size(); ++i) {
        UniPoly acc = num.coeff(i);
        for (std::size_t k = 1; k <= dden && k <= i; ++k) acc -= den.coeff(k) * out[i - k];
        out[i] = acc * inv;
    }
    return out;
}

}  // namespace msection
