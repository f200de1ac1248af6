#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <msection/cyclotomic.hpp>
#include <msection/horadam.hpp>
#include <msection/poly.hpp>
#include <msection/quadext.hpp>
#include <msection/rational.hpp>

#include "oracles.hpp"

using namespace msection;

namespace {

UniPoly poly_of(std::initializer_list<long> coeffs) {
    UniPoly p;
    std::size_t k = 0;
    for (long c : coeffs) p.set_coeff(k++, Rational(c));
    return p;
}

UniPoly random_poly(oracle::Rng& rng, long max_deg) {
    UniPoly p;
    const long deg = rng.pick(0, max_deg);
    for (long k = 0; k <= deg; ++k)
        p.set_coeff(static_cast<std::size_t>(k),
                    Rational(Int(rng.pick(-9, 9)), Int(rng.pick(1, 9))));
    return p;
}

}  // namespace

TEST_CASE("rational canonical form survives arithmetic") {
    oracle::Rng rng(20230401);
    for (int i = 0; i < 200; ++i) {
        const Rational a(Int(rng.pick(-50, 50)), Int(rng.nonzero(-50, 50)));
        const Rational b(Int(rng.pick(-50, 50)), Int(rng.nonzero(-50, 50)));
        for (const Rational& v : {a + b, a - b, a * b}) {
            CHECK(v.den() > 0);
            Int g;
            mpz_gcd(g.get_mpz_t(), v.num().get_mpz_t(), v.den().get_mpz_t());
            CHECK(g == 1);
        }
        if (!b.is_zero()) {
            const Rational q = a / b;
            CHECK(q.den() > 0);
            CHECK(q * b == a);
        }
    }
    CHECK(Rational(Int(4), Int(-6)) == Rational(Int(-2), Int(3)));
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("rational string round trip") {
    CHECK(Rational(Int(-7), Int(2)).str() == "-7/2");
    CHECK(Rational(5).str() == "5");
    for (const char* text : {"5", "-7/2", "0", "1234567890123456789012345678901/2"}) {
        auto parsed = Rational::parse(text);
        REQUIRE(parsed.has_value());
        CHECK(parsed->str() == text);
    }
    CHECK(!Rational::parse("1.5").has_value());
    CHECK(!Rational::parse("x").has_value());
    CHECK(!Rational::parse("1/0").has_value());
}

TEST_CASE("polynomial ring basics") {
    const UniPoly a = poly_of({1, 2, 3});
    const UniPoly b = poly_of({-1, 1});
    CHECK((a * b) == poly_of({-1, -1, -1, 3}));
    CHECK((a + b) == poly_of({0, 3, 3}));
    CHECK(a.eval(Rational(2)) == Rational(17));
    CHECK(poly_of({0, 0, 0}).is_zero());
    CHECK(poly_of({0, 1}).compose(poly_of({1, 1})) == poly_of({1, 1}));
}

TEST_CASE("polynomial exact-divide round trip") {
    oracle::Rng rng(777);
    for (int i = 0; i < 100; ++i) {
        const UniPoly a = random_poly(rng, 6);
        UniPoly b = random_poly(rng, 4);
        if (b.is_zero()) b = UniPoly(1);
        CHECK(poly_exact_div(a * b, b) == a);
    }
    CHECK_THROWS_AS(poly_exact_div(poly_of({1, 1}), poly_of({1, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(poly_divmod(poly_of({1}), UniPoly()), std::domain_error);
}

TEST_CASE("cyclotomic polynomials match exact division of x^m - 1") {
    CHECK(cyclotomic_polynomial(1) == poly_of({-1, 1}));

    // derive Phi_3 and Phi_4 the long way: strip the proper cyclotomic
    // factors off x^m - 1 with integer synthetic division
    const auto phi3 = oracle::exact_poly_div({-1, 0, 0, 1}, {-1, 1});
    CHECK(phi3 == std::vector<oracle::Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(3) == poly_of({1, 1, 1}));

    const auto phi4 = oracle::exact_poly_div(
        oracle::exact_poly_div({-1, 0, 0, 0, 1}, {-1, 1}), {1, 1});
    CHECK(phi4 == std::vector<oracle::Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(4) == poly_of({1, 0, 1}));

    CHECK(cyclotomic_polynomial(6) == poly_of({1, -1, 1}));
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_polynomial(-2), std::invalid_argument);
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^m - 1") {
    for (long m = 1; m <= 30; ++m) {
        UniPoly prod(1);
        for (long d = 1; d <= m; ++d)
            if (m % d == 0) prod *= cyclotomic_polynomial(d);
        UniPoly expected = UniPoly::monomial(static_cast<std::size_t>(m));
        expected.set_coeff(0, Rational(-1));
        CHECK(prod == expected);
    }
}

TEST_CASE("euler phi and cyclotomic degree agree") {
    for (long m = 1; m <= 40; ++m)
        CHECK(cyclotomic_polynomial(m).degree() ==
              static_cast<long>(euler_phi(static_cast<unsigned long>(m))));
}

TEST_CASE("roots of unity relations") {
    for (long m = 2; m <= 12; ++m) {
        Cyclotomic sum(0L);
        for (long k = 0; k < m; ++k) sum += Cyclotomic::zeta(m, k);
        CHECK(sum.is_zero());
        CHECK(Cyclotomic::zeta(m).pow(m) == Cyclotomic(1L));
        // distinct powers are distinct
        for (long k = 1; k < m; ++k) CHECK(Cyclotomic::zeta(m, k) != Cyclotomic::zeta(m, 0));
    }
}

TEST_CASE("cyclotomic inversion examples") {
    // zeta_3^{-1} = zeta_3^2
    CHECK(cyclo_invert(Cyclotomic::zeta(3)) == Cyclotomic::zeta(3, 2));
    // plain rational inverse
    CHECK(cyclo_invert(Cyclotomic(2L)) == Cyclotomic(Rational(Int(1), Int(2))));
    // (1 + zeta_4)^{-1} = (1 - zeta_4)/2, from the extended gcd of (1+x)
    // and x^2+1
    const Cyclotomic z = Cyclotomic(1L) + Cyclotomic::zeta(4);
    const Cyclotomic expected =
        (Cyclotomic(1L) - Cyclotomic::zeta(4)) * Cyclotomic(Rational(Int(1), Int(2)));
    CHECK(cyclo_invert(z) == expected);
    CHECK_THROWS_AS(cyclo_invert(Cyclotomic(0L)), std::domain_error);
}

TEST_CASE("random cyclotomic elements invert") {
    oracle::Rng rng(424242);
    int checked = 0;
    while (checked < 100) {
        const long m = rng.pick(1, 12);
        const long deg = static_cast<long>(euler_phi(static_cast<unsigned long>(m)));
        UniPoly residue;
        for (long k = 0; k < deg; ++k)
            residue.set_coeff(static_cast<std::size_t>(k), Rational(rng.pick(-5, 5)));
        const Cyclotomic z = Cyclotomic::from_residue(m, residue);
        if (z.is_zero()) continue;
        ++checked;
        CHECK(z * cyclo_invert(z) == Cyclotomic(1L));
    }
}

TEST_CASE("quadratic extension norm is multiplicative") {
    oracle::Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        const Int d = rng.nonzero(-30, 30);
        const QuadExt u{Rational(rng.pick(-9, 9)), Rational(rng.pick(-9, 9)), d};
        const QuadExt v{Rational(rng.pick(-9, 9)), Rational(rng.pick(-9, 9)), d};
        CHECK((u * v).norm() == u.norm() * v.norm());
        // multiplication round trip when v is invertible
        if (!v.norm().is_zero()) CHECK((u * v) / v == u);
    }
    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), Int(0)), std::domain_error);
}

TEST_CASE("perfect-square radicands stay formal until normalized") {
    const QuadExt v{Rational(1), Rational(1), Int(9)};  // 1 + sqrt(9)
    CHECK(!v.is_rational());
    CHECK(v.normalized().rational_part() == Rational(4));
    // non-squares and negative D are untouched
    const QuadExt w{Rational(1), Rational(1), Int(8)};
    CHECK(w.normalized() == w);
    const QuadExt u{Rational(1), Rational(1), Int(-4)};
    CHECK(u.normalized() == u);
    // binet stays exact when the discriminant happens to be square:
    // (1,2) has D = 9, terms 0,1,1,3,5,11
    CHECK(oracle::horadam(0, 1, 1, 2, 5) == 11);
    CHECK(quad_binet(1, 2, 5) == Rational(11));
}

TEST_CASE("binet closed form at pinned values") {
    CHECK(quad_binet(1, 1, 5) == Rational(5));  // F(5)
    // seeds of H01
    for (long r : {-3L, 1L, 4L})
        for (long s : {-2L, 1L, 3L}) {
            CHECK(quad_binet(r, s, 0) == Rational(0));
            CHECK(quad_binet(r, s, 1) == Rational(1));
        }
    // (2,3): 0,1,2,7,20 by the recurrence oracle
    CHECK(oracle::horadam(0, 1, 2, 3, 4) == 20);
    CHECK(quad_binet(2, 3, 4) == Rational(20));
    // degenerate discriminant r^2 + 4s = 0
    CHECK_THROWS_AS(quad_binet(2, -1, 3), std::domain_error);
}

TEST_CASE("binet agrees with the recurrence for the signature grid") {
    for (long r = -5; r <= 5; ++r) {
        if (r == 0) continue;
        for (long s = -5; s <= 5; ++s) {
            if (s == 0 || r * r + 4 * s == 0) continue;
            for (long n = 0; n <= 30; ++n)
                CHECK(quad_binet(r, s, n) == h01_term(r, s, n));
        }
    }
}
