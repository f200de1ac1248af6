#pragma once

#include <vector>

#include "msection/cyclotomic.hpp"
#include "msection/ogf.hpp"

namespace msection {

struct RootOfUnity {
    long m = 1;
    long k = 0;
    Cyclotomic value;  // zeta_m^k
};

/// All m-th roots of unity zeta_m^k, k = 0..m-1, as exact elements of
/// Q(zeta_m).
std::vector<RootOfUnity> roots_of_unity(long m);

/// Inverse of the root-of-unity Vandermonde matrix [(w^k x)^l]_{k,l}.
/// Every entry of row l is a Q(zeta_m) scalar times x^{-l}; the scalars
/// are stored and the x-power is implicit per row.
struct VandermondeInverse {
    long m = 1;
    std::vector<std::vector<Cyclotomic>> scalars;  // scalars[l][j]

    long row_x_power(long l) const { return -l; }
};

/// Builds the inverse entrywise from the explicit numerator/denominator
/// formula: DN(m,j) = prod_{i != j} (w^i - w^j) (the x^{m-1} factor
/// cancels against the numerator's x^{m-1-l}), and N(m,l,j) =
/// (-1)^l * e_{m-1-l}(all roots except w^j). The result is verified by
/// forward multiplication against the Vandermonde matrix.
VandermondeInverse build_inverse(long m);

/// All elementary symmetric values e_0..e_n of xs, by the product
/// recurrence prod(1 + x_i t).
std::vector<Cyclotomic> elementary_symmetric_all(const std::vector<Cyclotomic>& xs);

/// e_k by literal subset enumeration; exponential, retained as a slow
/// cross-check for small inputs.
Cyclotomic elementary_symmetric_enumerated(const std::vector<Cyclotomic>& xs, std::size_t k);

/// The l-th section OGF of num/den by exact root-of-unity filtering over
/// Q(zeta_m): combine G(w^j x) with row l of the inverse matrix, check
/// that all cyclotomic components cancel and that only exponents
/// congruent to l mod m survive, then substitute x^m -> x and reduce.
/// The result is cross-checked against the series oracle through
/// sanity_terms coefficients of the input.
RationalOGF section_via_filter(const RationalOGF& ogf, long m, long l, long sanity_terms = 64);

}  // namespace msection
