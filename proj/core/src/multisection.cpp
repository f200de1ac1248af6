#include "msection/multisection.hpp"

#include <sstream>

#include "msection/chebyshev.hpp"
#include "msection/series.hpp"

namespace msection {

namespace {

void check_section_range(long m, long l) {
    if (m < 1) throw std::invalid_argument("section: m must be >= 1");
    if (l < 0 || l >= m) throw std::invalid_argument("section: l out of range [0, m)");
}

Int minus_minus_s_pow(const Int& s, long m) {
    return -ipow(-s, static_cast<unsigned long>(m));  // -(-s)^m
}

// H01 values for a derived signature. The section map can produce
// r' = SUM(r,s;m) = 0 (e.g. r^2 + 2s = 0 at m = 2), which is outside the
// public nonzero-signature contract but still a perfectly good recurrence.
Rational h01_value(const Int& r, const Int& s, long n) {
    if (n < 0) return -pow_int(-s, n) * h01_value(r, s, -n);
    if (n == 0) return Rational(0);
    Int prev = 0, cur = 1;
    for (long i = 1; i < n; ++i) {
        Int next = r * cur + s * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Rational(cur);
}

}  // namespace

SectionParams section_params(const HoradamSpec& spec, long m, long l) {
    check_section_range(m, l);
    SectionParams out;
    out.m = m;
    out.l = l;
    out.p_prime = h_term(spec, l).to_int();
    out.q_prime = h_term(spec, m + l).to_int();
    out.r_prime = sum_value(spec.r, spec.s, m);
    out.s_prime = minus_minus_s_pow(spec.s, m);
    return out;
}

RationalOGF ogf_h(const HoradamSpec& spec) {
    UniPoly num;
    num.set_coeff(0, Rational(spec.p));
    num.set_coeff(1, Rational(spec.q - spec.p * spec.r));
    UniPoly den(1);
    den.set_coeff(1, Rational(-spec.r));
    den.set_coeff(2, Rational(-spec.s));
    return reduce_ogf(num, den);
}

std::pair<UniPoly, UniPoly> section_ogf_h_raw(const HoradamSpec& spec, long m, long l) {
    check_section_range(m, l);
    const Int hl = h_term(spec, l).to_int();
    const Int hml = h_term(spec, m + l).to_int();
    const Int sum = sum_value(spec.r, spec.s, m);

    UniPoly num;
    num.set_coeff(0, Rational(hl));
    num.set_coeff(1, Rational(hml - hl * sum));
    UniPoly den(1);
    den.set_coeff(1, Rational(-sum));
    den.set_coeff(2, pow_int(-spec.s, m));
    return {num, den};
}

RationalOGF section_ogf_h(const HoradamSpec& spec, long m, long l) {
    auto [num, den] = section_ogf_h_raw(spec, m, l);
    return reduce_ogf(num, den);
}

namespace {

// Numerator of the S-section OGF; l may be -1 or -2 (the shifted cases
// reachable from the H-from-S relation), where S(-1) = 0, S(-2) = -1.
BiPoly s_section_numerator(long m, long l) {
    BiPoly num(s_poly(l));
    num.set_coeff(1, s_poly(m + l) - s_poly(l) * r_poly(m));
    return num;
}

BiPoly s_section_denominator(long m) {
    BiPoly den(UniPoly(1));
    den.set_coeff(1, -r_poly(m));
    den.set_coeff(2, UniPoly(1));
    return den;
}

}  // namespace

SPolyOGF section_ogf_s(long m, long l) {
    check_section_range(m, l);
    return {s_section_numerator(m, l), s_section_denominator(m)};
}

SignC c_sign(const Int& s, long m) {
    if (s == 0) throw std::invalid_argument("c_sign: s must be nonzero");
    if (m < 1) throw std::invalid_argument("c_sign: m must be >= 1");
    if (s < 0) return {+1};
    const long rem = m % 4;
    return {(rem == 1 || rem == 0) ? +1 : -1};
}

CheckResult s_section_identity_check(long m, long l, long n_max) {
    check_section_range(m, l);
    const UniPoly rm = r_poly(m);

    // S(k, R(m,y)) for k in [-2, n_max], by the recurrence in the composed
    // argument; avoids repeated full compositions.
    std::vector<UniPoly> comp(static_cast<std::size_t>(n_max + 3));
    comp[0] = -UniPoly(1);  // S(-2)
    comp[1] = UniPoly();    // S(-1)
    for (long k = 0; k <= n_max; ++k)
        comp[static_cast<std::size_t>(k + 2)] =
            k == 0 ? UniPoly(1)
                   : rm * comp[static_cast<std::size_t>(k + 1)] - comp[static_cast<std::size_t>(k)];

    const UniPoly sl = s_poly(l);
    const UniPoly sml = s_poly(m + l);
    for (long n = 0; n <= n_max; ++n) {
        const UniPoly lhs = s_poly(m * n + l);
        const UniPoly rhs =
            sml * comp[static_cast<std::size_t>(n + 1)] - sl * comp[static_cast<std::size_t>(n)];
        if (lhs != rhs) {
            return {false, "S-section identity fails at m=" + std::to_string(m) +
                               " l=" + std::to_string(l) + " n=" + std::to_string(n)};
        }
    }
    if (l == 0) {
        // simplified form: S(mn,y) = S(n,R) + S(m-2,y)*S(n-1,R)
        const UniPoly sm2 = s_poly(m - 2);
        for (long n = 0; n <= n_max; ++n) {
            const UniPoly lhs = s_poly(m * n);
            const UniPoly rhs = comp[static_cast<std::size_t>(n + 2)] +
                                sm2 * comp[static_cast<std::size_t>(n + 1)];
            if (lhs != rhs) {
                return {false, "simplified S-section identity fails at m=" + std::to_string(m) +
                                   " n=" + std::to_string(n)};
            }
        }
    }
    return {};
}

CheckResult h01_section_check(const Int& r, const Int& s, long m, long l, long n_max) {
    check_section_range(m, l);
    const Rational p_prime = h01_term(r, s, l);
    const Rational q_prime = h01_term(r, s, m + l);
    const Int r_prime = sum_value(r, s, m);
    const Int s_prime = minus_minus_s_pow(s, m);

    for (long n = 0; n <= n_max; ++n) {
        const Rational lhs = h01_term(r, s, m * n + l);
        const Rational rhs = q_prime * h01_value(r_prime, s_prime, n) +
                             p_prime * Rational(s_prime) * h01_value(r_prime, s_prime, n - 1);
        if (lhs != rhs) {
            std::ostringstream os;
            os << "H01 section fails at r=" << r << " s=" << s << " m=" << m << " l=" << l
               << " n=" << n << ": " << lhs.str() << " vs " << rhs.str();
            return {false, os.str()};
        }
    }
    return {};
}

BiPoly master_identity_lhs(long m) {
    if (m < 1) throw std::invalid_argument("master_identity: m must be >= 1");
    BiPoly lhs(UniPoly(1));
    lhs.set_coeff(static_cast<std::size_t>(m), -r_poly(m));
    lhs.set_coeff(static_cast<std::size_t>(2 * m), UniPoly(1));
    return lhs;
}

std::vector<BiPoly> master_identity_numerators(long m) {
    if (m < 1) throw std::invalid_argument("master_identity: m must be >= 1");
    std::vector<BiPoly> nums;
    nums.reserve(static_cast<std::size_t>(m));
    for (long l = 0; l < m; ++l) {
        // N(m,l) with the x-power already at x^m
        BiPoly n(s_poly(l));
        n.set_coeff(static_cast<std::size_t>(m), s_poly(m + l) - s_poly(l) * r_poly(m));
        nums.push_back(std::move(n));
    }
    return nums;
}

BiPoly master_identity_rhs(const std::vector<BiPoly>& numerators) {
    BiPoly sum;
    for (std::size_t l = 0; l < numerators.size(); ++l)
        sum += numerators[l].shifted(l);
    BiPoly gs_den(UniPoly(1));
    gs_den.set_coeff(1, -UniPoly::monomial(1));  // -y*x
    gs_den.set_coeff(2, UniPoly(1));
    return gs_den * sum;
}

CheckResult master_identity_check(long m) {
    const BiPoly lhs = master_identity_lhs(m);
    const BiPoly rhs = master_identity_rhs(master_identity_numerators(m));
    if (lhs == rhs) return {};
    // locate the first differing coefficient for the report
    const long max_x = std::max(lhs.degree(), rhs.degree());
    for (long i = 0; i <= max_x; ++i) {
        const UniPoly a = lhs.coeff(static_cast<std::size_t>(i));
        const UniPoly b = rhs.coeff(static_cast<std::size_t>(i));
        if (a == b) continue;
        const long max_y = std::max(a.degree(), b.degree());
        for (long j = 0; j <= max_y; ++j) {
            if (a.coeff(static_cast<std::size_t>(j)) != b.coeff(static_cast<std::size_t>(j))) {
                return {false, "master identity fails at m=" + std::to_string(m) + ", x^" +
                                   std::to_string(i) + " y^" + std::to_string(j)};
            }
        }
    }
    return {false, "master identity fails at m=" + std::to_string(m)};
}

CheckResult alt_bisection_check(const Int& r, const Int& s, long m) {
    if (r == 0 || s == 0) throw std::invalid_argument("alt_bisection_check: r,s must be nonzero");
    if (m < 0) throw std::invalid_argument("alt_bisection_check: m must be >= 0");

    const Rational h01_m = h01_term(r, s, m);
    const Int sum_m = sum_value(r, s, m);
    const Int sum_m1 = sum_value(r, s, m + 1);
    const Rational sign_pow = pow_int(-s, m);  // (-s)^m

    const Rational odd_expected = h01_m * Rational(sum_m1) + sign_pow;
    if (h01_term(r, s, 2 * m + 1) != odd_expected) {
        std::ostringstream os;
        os << "odd-index bisection fails at r=" << r << " s=" << s << " m=" << m;
        return {false, os.str()};
    }
    const Rational even_expected = h01_m * Rational(sum_m);
    if (h01_term(r, s, 2 * m) != even_expected) {
        std::ostringstream os;
        os << "even-index bisection fails at r=" << r << " s=" << s << " m=" << m;
        return {false, os.str()};
    }

    // H(p,q) counterparts, through the H -> H01 linear relation, for a few
    // representative seeds.
    const Rational h01_m_minus_1 = h01_term(r, s, m - 1);
    static const std::pair<long, long> seeds[] = {{2, 1}, {1, 3}, {-1, 2}, {0, -2}};
    for (const auto& [p, q] : seeds) {
        const HoradamSpec spec{p, q, r, s};
        const Rational odd_h =
            Rational(q) * odd_expected +
            Rational(p * s) * (h01_m * Rational(sum_m) /* H01(2m) */);
        if (h_term(spec, 2 * m + 1) != odd_h) {
            std::ostringstream os;
            os << "odd-index H bisection fails at p=" << p << " q=" << q << " r=" << r
               << " s=" << s << " m=" << m;
            return {false, os.str()};
        }
        // H(2m) = SUM(m)*(q*H01(m) + s*p*H01(m-1)) - (-s)^m * p
        const Rational even_h = Rational(sum_m) * (Rational(q) * h01_m +
                                Rational(p * s) * h01_m_minus_1) -
                                sign_pow * Rational(p);
        if (h_term(spec, 2 * m) != even_h) {
            std::ostringstream os;
            os << "even-index H bisection fails at p=" << p << " q=" << q << " r=" << r
               << " s=" << s << " m=" << m;
            return {false, os.str()};
        }
    }
    return {};
}

CheckResult ghml_from_gsml_check(const HoradamSpec& spec, long m, long l, long n_max) {
    check_section_range(m, l);
    if (n_max < 1) throw std::invalid_argument("ghml_from_gsml_check: n_max must be >= 1");

    // Section OGF for H, expanded (integers at integer seeds).
    const SeriesPrefix lhs = expand(section_ogf_h(spec, m, l), n_max);

    // S-section OGFs at shifted parts l-1 and l-2; expansion coefficients
    // are polynomials in y.
    const BiPoly den = s_section_denominator(m);
    const auto coeffs_l1 = expand_bivariate(s_section_numerator(m, l - 1), den, n_max);
    const auto coeffs_l2 = expand_bivariate(s_section_numerator(m, l - 2), den, n_max);

    const Rational q(spec.q);
    const Rational ps(spec.p * spec.s);
    for (long n = 0; n < n_max; ++n) {
        // substitution x -> (sqrt(-s))^m x contributes weight m*n
        const Rational rhs =
            q * scaled_eval(coeffs_l1[static_cast<std::size_t>(n)], spec.r, spec.s,
                            (l - 1) + m * n) +
            ps * scaled_eval(coeffs_l2[static_cast<std::size_t>(n)], spec.r, spec.s,
                             (l - 2) + m * n);
        if (rhs != lhs.coeffs[static_cast<std::size_t>(n)]) {
            std::ostringstream os;
            os << "GH-from-GS relation fails at m=" << m << " l=" << l << " n=" << n << ": "
               << lhs.coeffs[static_cast<std::size_t>(n)].str() << " vs " << rhs.str();
            return {false, os.str()};
        }
    }
    return {};
}

}  // namespace msection
