#pragma once

#include <string>

#include "msection/poly.hpp"

namespace msection {

/// Rational ordinary generating function numerator/denominator pair in x.
/// Canonical (reduced) form: gcd(num, den) constant and den(0) = 1.
struct RationalOGF {
    UniPoly num;
    UniPoly den = UniPoly(1);

    friend bool operator==(const RationalOGF& a, const RationalOGF& b) {
        return a.num == b.num && a.den == b.den;
    }

    std::string str() const;
};

/// Canonicalizes num/den: divides out the polynomial gcd and rescales so
/// the denominator has constant term 1. Throws when den is zero or the
/// reduced denominator has zero constant term.
RationalOGF reduce_ogf(UniPoly num, UniPoly den);

// Rational-function arithmetic; results are reduced.
RationalOGF ogf_add(const RationalOGF& a, const RationalOGF& b);
RationalOGF ogf_scale(const RationalOGF& a, const Rational& c);
/// Substitution x -> x^k.
RationalOGF ogf_subst_pow(const RationalOGF& a, long k);
/// Multiplication by x^k.
RationalOGF ogf_mul_xpow(const RationalOGF& a, long k);

}  // namespace msection
