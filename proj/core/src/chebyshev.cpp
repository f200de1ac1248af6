#include "msection/chebyshev.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace msection {

namespace {

// Memoized S(n) for n >= 0. Must stay behaviorally invisible; guarded for
// concurrent use.
UniPoly s_poly_nonneg(std::size_t n) {
    static std::mutex mu;
    static std::vector<UniPoly> cache;

    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        cache.push_back(UniPoly(1));                 // S(0)
        cache.push_back(UniPoly::monomial(1));       // S(1)
    }
    const UniPoly y = UniPoly::monomial(1);
    while (cache.size() <= n) {
        const std::size_t k = cache.size();
        cache.push_back(y * cache[k - 1] - cache[k - 2]);
    }
    return cache[n];
}

}  // namespace

UniPoly s_poly(long n) {
    if (n >= 0) return s_poly_nonneg(static_cast<std::size_t>(n));
    if (n == -1) return UniPoly();
    return -s_poly_nonneg(static_cast<std::size_t>(-n - 2));
}

UniPoly r_poly(long n) { return s_poly(n) - s_poly(n - 2); }

bool cassini_check(long n) {
    const UniPoly lhs = s_poly(n) * s_poly(n) - s_poly(n - 1) * s_poly(n + 1);
    return lhs == UniPoly(1);
}

bool bisection_identities_check(long m) {
    if (m < 0) throw std::invalid_argument("bisection_identities_check: m must be >= 0");
    const UniPoly r = r_poly(m);
    const UniPoly one(1);
    if (s_poly(2 * m - 1) != s_poly(m - 1) * r) return false;
    if (s_poly(2 * m - 2) != one + s_poly(m - 2) * r) return false;
    if (s_poly(2 * m) != s_poly(m) * r - one) return false;
    return true;
}

Rational scaled_eval(const UniPoly& p, const Int& r, const Int& s, long w) {
    if (s == 0) throw std::invalid_argument("scaled_eval: s must be nonzero");
    const Int minus_s = -s;
    Rational acc(0);
    Int r_pow = 1;  // r^k, tracked incrementally
    const auto& coeffs = p.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) {
            const long diff = w - static_cast<long>(k);
            if (diff % 2 != 0)
                throw std::logic_error("scaled_eval: coefficient parity does not match weight");
            acc += coeffs[k] * Rational(r_pow) * pow_int(minus_s, diff / 2);
        }
        r_pow *= r;
    }
    return acc;
}

Rational scaled_s(const Int& r, const Int& s, long n) { return scaled_eval(s_poly(n), r, s, n); }

Rational scaled_r(const Int& r, const Int& s, long n) { return scaled_eval(r_poly(n), r, s, n); }

namespace {

using Mat2 = std::array<Int, 4>;  // row major: a b / c d

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

}  // namespace

bool q_matrix_power_check(const Int& r, const Int& s, long n) {
    if (r == 0 || s == 0) throw std::invalid_argument("q_matrix_power_check: r,s must be nonzero");
    if (n < 0) throw std::invalid_argument("q_matrix_power_check: n must be >= 0");

    // Brute-force power of Q = [[r, s], [1, 0]].
    Mat2 acc{1, 0, 0, 1};
    const Mat2 q{r, s, 1, 0};
    for (long i = 0; i < n; ++i) acc = mat_mul(acc, q);

    const Rational rs(s);
    const std::array<Rational, 4> expected{
        scaled_s(r, s, n), rs * scaled_s(r, s, n - 1),
        scaled_s(r, s, n - 1), rs * scaled_s(r, s, n - 2)};
    for (int i = 0; i < 4; ++i)
        if (expected[i] != Rational(acc[i])) return false;

    // trace and determinant follow the scaled R-polynomial and (-s)^n
    if (Rational(acc[0] + acc[3]) != scaled_r(r, s, n)) return false;
    if (Rational(acc[0] * acc[3] - acc[1] * acc[2]) != pow_int(-s, n)) return false;
    return true;
}

}  // namespace msection
