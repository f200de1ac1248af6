#pragma once

#include <stdexcept>
#include <vector>

#include "msection/rational.hpp"

namespace msection {

/// Parameter bundle of H(p,q;r,s;n): seeds (p,q), signature (r,s) with
/// r, s nonzero.
struct HoradamSpec {
    Int p, q, r, s;

    HoradamSpec(Int p_, Int q_, Int r_, Int s_)
        : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), s(std::move(s_)) {
        if (r == 0 || s == 0)
            throw std::invalid_argument("HoradamSpec: signature components must be nonzero");
    }
};

/// H(p,q;r,s;n) for n >= 0 by the plain seeded recurrence
/// H(n) = r*H(n-1) + s*H(n-2).
Int horadam_direct(const Int& p, const Int& q, const Int& r, const Int& s, long n);

/// H01(r,s;n): seeds 0,1. Integer for n >= 0; for n < 0 extended by
/// H01(n) = -(-s)^n * H01(-n), an exact rational.
Rational h01_term(const Int& r, const Int& s, long n);

/// H(p,q;r,s;n) = q*H01(n) + p*s*H01(n-1), valid for every integer n.
Rational h_term(const HoradamSpec& spec, long n);

/// SUM(r,s;m): first signature component of the m-section. Computed by
/// four independent routes which must agree:
///   (a) row m of the Lucas-type triangle evaluated at s/r^2, scaled by r^m
///   (b) the (2,r)-seeded recurrence at index m
///   (c) s*H01(m-1) + H01(m+1)
///   (d) the scaled Chebyshev R-polynomial value
/// Throws std::logic_error if any two routes disagree.
Int sum_value(const Int& r, const Int& s, long m);

/// Row of the irregular triangle of Lucas-polynomial coefficients
/// (row n has floor(n/2)+1 entries).
struct TriangleRow {
    long n = 0;
    std::vector<Int> entries;
};

/// Row n computed by both the two-term recurrence and the closed
/// factorial formula, asserted equal; for n <= ogf_horizon the row is
/// also reproduced from the bivariate generating function
/// (2 - x)/(1 - x - y*x^2). Route disagreement throws std::logic_error.
TriangleRow triangle_row(long n, long ogf_horizon = 64);

}  // namespace msection
