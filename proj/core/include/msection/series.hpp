#pragma once

#include <string>
#include <vector>

#include "msection/ogf.hpp"
#include "msection/poly.hpp"

namespace msection {

/// The first N coefficients of a power series, plus a provenance tag.
struct SeriesPrefix {
    std::vector<Rational> coeffs;
    std::string source;

    long size() const { return static_cast<long>(coeffs.size()); }
};

/// Coefficients a(0..n-1) of num/den, by exact long division. The
/// denominator must have a nonzero constant term.
SeriesPrefix expand(const RationalOGF& ogf, long n = 64);

/// Subsequence a(m*k + l) of the prefix, for 0 <= l < m.
SeriesPrefix section_terms(const SeriesPrefix& prefix, long m, long l);

/// True iff num == den * (sum of prefix coefficients) mod x^N, i.e. the
/// OGF reproduces the prefix exactly.
bool certify_ogf(const RationalOGF& ogf, const SeriesPrefix& prefix);

/// Power-series coefficients (polynomials in y) of a bivariate rational
/// function num(y,x)/den(y,x), where the denominator's x-constant
/// coefficient must be a nonzero rational.
std::vector<UniPoly> expand_bivariate(const BiPoly& num, const BiPoly& den, long n);

}  // namespace msection
