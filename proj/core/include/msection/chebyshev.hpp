#pragma once

#include "msection/poly.hpp"
#include "msection/rational.hpp"

namespace msection {

/// Chebyshev S-polynomial: S(0) = 1, S(1) = y, S(n) = y*S(n-1) - S(n-2).
/// Negative indices: S(-1) = 0 and S(n) = -S(-n-2) for n <= -2.
UniPoly s_poly(long n);

/// Monic Chebyshev T: R(n) = S(n) - S(n-2); R(0) = 2, R(n) = R(-n).
UniPoly r_poly(long n);

/// S(n)^2 - S(n-1)*S(n+1) == 1 as an exact polynomial identity.
bool cassini_check(long n);

/// The three bisection identities in Z[y], for m >= 0:
///   S(2m-1) = S(m-1)*R(m)
///   S(2m-2) = 1 + S(m-2)*R(m)
///   S(2m)   = S(m)*R(m) - 1
bool bisection_identities_check(long m);

/// Evaluates (sqrt(-s))^w * p(r/sqrt(-s)) without radicals. Every nonzero
/// coefficient index of p must have the parity of w; the result is the
/// exact rational sum coeff_k * r^k * (-s)^((w-k)/2).
Rational scaled_eval(const UniPoly& p, const Int& r, const Int& s, long w);

/// (sqrt(-s))^n * S(n, r/sqrt(-s)); equals H01(r,s;n+1). Exact rational
/// for negative n (powers of 1/s), integer for n >= 0.
Rational scaled_s(const Int& r, const Int& s, long n);

/// (sqrt(-s))^n * R(n, r/sqrt(-s)); integer for n >= 0.
Rational scaled_r(const Int& r, const Int& s, long n);

/// Compares the n-th power of the transfer matrix [[r,s],[1,0]], computed
/// by repeated exact multiplication, against its scaled-Chebyshev entries
/// [[S_n, s*S_{n-1}], [S_{n-1}, s*S_{n-2}]] (scaled form), and checks
/// trace = scaled R(n) and det = (-s)^n.
bool q_matrix_power_check(const Int& r, const Int& s, long n);

}  // namespace msection
