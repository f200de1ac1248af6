#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msection/horadam.hpp"
#include "msection/ogf.hpp"
#include "msection/poly.hpp"

namespace msection {

/// Seeds and signature of the l-th part of the m-section:
/// H(p,q;r,s;mn+l) = H(p',q';r',s';n).
struct SectionParams {
    Int p_prime, q_prime, r_prime, s_prime;
    long m = 1, l = 0;
};

/// c(s,m) in {+1,-1}: +1 for s < 0; for s > 0 the period-4 pattern
/// 1,-1,-1,1 over m = 1,2,3,4.
struct SignC {
    int value = 1;
};

/// Boolean verdict plus the first counterexample found (empty when ok).
struct CheckResult {
    bool ok = true;
    std::string counterexample;

    explicit operator bool() const { return ok; }
};

/// (p', q', r', s') = (H(l), H(m+l), SUM(r,s;m), -(-s)^m).
/// Requires m >= 1 and 0 <= l < m.
SectionParams section_params(const HoradamSpec& spec, long m, long l);

/// GH(p,q;r,s;x) = (p - (p*r - q)*x) / (1 - r*x - s*x^2), reduced.
RationalOGF ogf_h(const HoradamSpec& spec);

/// Closed-form OGF of the l-th section:
///   [H(l) - (H(l)*SUM(r,s;m) - H(m+l))*x] / [1 - SUM(r,s;m)*x + (-s)^m*x^2]
/// reduced to canonical form.
RationalOGF section_ogf_h(const HoradamSpec& spec, long m, long l);

/// The same numerator/denominator before gcd reduction; every l shares
/// the denominator literally in this form.
std::pair<UniPoly, UniPoly> section_ogf_h_raw(const HoradamSpec& spec, long m, long l);

/// Bivariate OGF of the Chebyshev S-polynomial section: numerator
/// S(l,y) - (S(l,y)*R(m,y) - S(m+l,y))*x over 1 - R(m,y)*x + x^2.
struct SPolyOGF {
    BiPoly num;
    BiPoly den;
};

/// Requires m >= 1 and 0 <= l < m.
SPolyOGF section_ogf_s(long m, long l);

SignC c_sign(const Int& s, long m);

/// Polynomial-composition identity (the s = -1 specialization, where the
/// sign factor is 1), verified in Z[y] for 0 <= n <= n_max:
///   S(mn+l,y) = S(m+l,y)*S(n-1,R(m,y)) - S(l,y)*S(n-2,R(m,y))
/// plus the simplified l = 0 form
///   S(mn,y) = S(n,R(m,y)) + S(m-2,y)*S(n-1,R(m,y)).
CheckResult s_section_identity_check(long m, long l, long n_max);

/// H01(r,s;mn+l) = q'*H01(r',s';n) + p'*s'*H01(r',s';n-1) in exact
/// integers for 0 <= n <= n_max, with primes from the section map.
CheckResult h01_section_check(const Int& r, const Int& s, long m, long l, long n_max);

/// The bivariate identity behind the section OGFs:
///   1 - R(m,y)x^m + x^{2m}
///     == (1 - yx + x^2) * sum_{l=0}^{m-1} x^l * N(m,l;y,x^m)
/// with N(m,l) = S(l,y) - (S(l,y)R(m,y) - S(m+l,y))*x^m.
CheckResult master_identity_check(long m);

// Pieces of the identity, exposed so tests can mutate numerators.
BiPoly master_identity_lhs(long m);
std::vector<BiPoly> master_identity_numerators(long m);
BiPoly master_identity_rhs(const std::vector<BiPoly>& numerators);

/// The alternative bisection identities in scaled-integer form:
///   H01(2m+1) = H01(m)*SUM(r,s;m+1) + (-s)^m
///   H01(2m)   = H01(m)*SUM(r,s;m)
/// and their H(p,q;...) counterparts for a small internal grid of seeds.
CheckResult alt_bisection_check(const Int& r, const Int& s, long m);

/// Coefficient-wise comparison, through order n_max, of the section OGF
/// for H against the scaled combination of two S-section OGFs
/// (arguments l-1 and l-2, substituted x -> (sqrt(-s))^m x and weighted
/// by q*(sqrt(-s))^{l-1} and p*s*(sqrt(-s))^{l-2}).
CheckResult ghml_from_gsml_check(const HoradamSpec& spec, long m, long l, long n_max);

}  // namespace msection
