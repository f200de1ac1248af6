#include "msection/horadam.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "msection/chebyshev.hpp"
#include "msection/poly.hpp"

namespace msection {

Int horadam_direct(const Int& p, const Int& q, const Int& r, const Int& s, long n) {
    if (r == 0 || s == 0) throw std::invalid_argument("horadam_direct: r,s must be nonzero");
    if (n < 0) throw std::invalid_argument("horadam_direct: n must be >= 0");
    if (n == 0) return p;
    Int prev = p, cur = q;
    for (long i = 1; i < n; ++i) {
        Int next = r * cur + s * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational h01_term(const Int& r, const Int& s, long n) {
    if (r == 0 || s == 0) throw std::invalid_argument("h01_term: r,s must be nonzero");
    if (n >= 0) return Rational(horadam_direct(0, 1, r, s, n));
    return -pow_int(-s, n) * Rational(horadam_direct(0, 1, r, s, -n));
}

Rational h_term(const HoradamSpec& spec, long n) {
    return Rational(spec.q) * h01_term(spec.r, spec.s, n) +
           Rational(spec.p * spec.s) * h01_term(spec.r, spec.s, n - 1);
}

namespace {

Int factorial(long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

std::vector<Int> triangle_row_recurrence(long n) {
    // T(n,k) = T(n-1,k) + T(n-2,k-1); T(0,.) = [2], T(1,.) = [1]
    std::vector<Int> prev2{2}, prev{1};
    if (n == 0) return prev2;
    for (long i = 2; i <= n; ++i) {
        std::vector<Int> row(static_cast<std::size_t>(i / 2) + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k < prev.size()) row[k] = prev[k];
            if (k >= 1 && k - 1 < prev2.size()) row[k] += prev2[k - 1];
        }
        prev2 = std::move(prev);
        prev = std::move(row);
    }
    return prev;
}

std::vector<Int> triangle_row_factorial(long n) {
    if (n == 0) return {2};
    std::vector<Int> row;
    for (long k = 0; k <= n / 2; ++k) {
        // n*(n-1-k)! / (k! * (n-2k)!)
        Rational t = Rational(Int(n) * factorial(n - 1 - k)) /
                     Rational(factorial(k) * factorial(n - 2 * k));
        row.push_back(t.to_int());
    }
    return row;
}

// Coefficient of x^n in (2 - x)/(1 - x - y*x^2), a polynomial in y.
UniPoly triangle_row_via_ogf(long n) {
    const UniPoly y = UniPoly::monomial(1);
    UniPoly b0(2);
    if (n == 0) return b0;
    UniPoly b1(1);  // 2 - 1 from the numerator's -x
    for (long i = 2; i <= n; ++i) {
        UniPoly next = b1 + y * b0;
        b0 = std::move(b1);
        b1 = std::move(next);
    }
    return b1;
}

}  // namespace

TriangleRow triangle_row(long n, long ogf_horizon) {
    if (n < 0) throw std::invalid_argument("triangle_row: n must be >= 0");

    TriangleRow row{n, triangle_row_recurrence(n)};
    const auto explicit_row = triangle_row_factorial(n);
    if (row.entries != explicit_row)
        throw std::logic_error("triangle_row: recurrence and factorial routes disagree at n=" +
                               std::to_string(n));

    if (n <= ogf_horizon) {
        const UniPoly via_ogf = triangle_row_via_ogf(n);
        UniPoly as_poly;
        for (std::size_t k = 0; k < row.entries.size(); ++k)
            as_poly.set_coeff(k, Rational(row.entries[k]));
        if (via_ogf != as_poly)
            throw std::logic_error("triangle_row: generating-function route disagrees at n=" +
                                   std::to_string(n));
    }
    return row;
}

namespace {

Int sum_value_all_routes(const Int& r, const Int& s, long m) {
    // (a) triangle row polynomial: sum_k T(m,k) r^(m-2k) s^k
    Int via_triangle = 0;
    {
        const auto row = triangle_row(m);
        Int s_pow = 1;
        for (std::size_t k = 0; k < row.entries.size(); ++k) {
            via_triangle += row.entries[k] * ipow(r, static_cast<unsigned long>(m - 2 * k)) * s_pow;
            s_pow *= s;
        }
    }
    // (b) Lucas-type recurrence with seeds (2, r)
    const Int via_recurrence = horadam_direct(2, r, r, s, m);
    // (c) s*H01(m-1) + H01(m+1); m=0 touches the rational H01(-1) = 1/s
    const Rational via_h01 = Rational(s) * h01_term(r, s, m - 1) + h01_term(r, s, m + 1);
    // (d) scaled Chebyshev R value
    const Rational via_chebyshev = scaled_r(r, s, m);

    const Rational a(via_triangle), b(via_recurrence);
    if (!(a == b && b == via_h01 && via_h01 == via_chebyshev)) {
        std::ostringstream os;
        os << "sum_value: route disagreement at r=" << r << " s=" << s << " m=" << m << ": "
           << a.str() << ", " << b.str() << ", " << via_h01.str() << ", " << via_chebyshev.str();
        throw std::logic_error(os.str());
    }
    return via_triangle;
}

}  // namespace

Int sum_value(const Int& r, const Int& s, long m) {
    if (r == 0 || s == 0) throw std::invalid_argument("sum_value: r,s must be nonzero");
    if (m < 0) throw std::invalid_argument("sum_value: m must be >= 0");

    // grid sweeps hit the same (r,s,m) constantly; cache behind the
    // four-route assertion
    using Key = std::tuple<Int, Int, long>;
    static std::mutex mu;
    static std::map<Key, Int> cache;
    const Key key{r, s, m};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Int value = sum_value_all_routes(r, s, m);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace msection
