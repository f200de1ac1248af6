#include "msection/cyclotomic.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace msection {

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

UniPoly x_pow_minus_one(long m) {
    UniPoly p = UniPoly::monomial(static_cast<std::size_t>(m));
    p.set_coeff(0, Rational(-1));
    return p;
}

}  // namespace

UniPoly cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");

    static std::mutex mu;
    static std::unordered_map<long, UniPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    UniPoly result = x_pow_minus_one(m);
    for (long d = 1; d < m; ++d) {
        if (m % d == 0) result = poly_exact_div(result, cyclotomic_polynomial(d));
    }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(m, result);
    return result;
}

Cyclotomic Cyclotomic::zeta(long m, long k) {
    if (m < 1) throw std::invalid_argument("Cyclotomic::zeta: m must be >= 1");
    k %= m;
    if (k < 0) k += m;
    return from_residue(m, UniPoly::monomial(static_cast<std::size_t>(k)));
}

Cyclotomic Cyclotomic::from_residue(long m, const UniPoly& poly) {
    if (m < 1) throw std::invalid_argument("Cyclotomic: m must be >= 1");
    if (m == 1) {
        // Q(zeta_1) = Q; reduce mod x - 1, i.e. evaluate at 1.
        return Cyclotomic(poly.eval(Rational(1)));
    }
    auto [q, r] = poly_divmod(poly, cyclotomic_polynomial(m));
    (void)q;
    return Cyclotomic(m, std::move(r));
}

void Cyclotomic::align(Cyclotomic& x, Cyclotomic& y) {
    if (x.m_ == y.m_) return;
    if (x.m_ == 1) {
        x.m_ = y.m_;
        return;
    }
    if (y.m_ == 1) {
        y.m_ = x.m_;
        return;
    }
    throw std::invalid_argument("Cyclotomic: conductor mismatch (" + std::to_string(x.m_) +
                                " vs " + std::to_string(y.m_) + ")");
}

Cyclotomic operator+(Cyclotomic x, Cyclotomic y) {
    Cyclotomic::align(x, y);
    return Cyclotomic(x.m_, x.residue_ + y.residue_);
}

Cyclotomic operator-(Cyclotomic x, Cyclotomic y) {
    Cyclotomic::align(x, y);
    return Cyclotomic(x.m_, x.residue_ - y.residue_);
}

Cyclotomic operator*(Cyclotomic x, Cyclotomic y) {
    Cyclotomic::align(x, y);
    return Cyclotomic::from_residue(x.m_, x.residue_ * y.residue_);
}

Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * y.inverse(); }

Cyclotomic Cyclotomic::operator-() const { return Cyclotomic(m_, -residue_); }

bool operator==(Cyclotomic x, Cyclotomic y) {
    if (x.m_ == y.m_) return x.residue_ == y.residue_;
    // Distinct conductors only agree on rational values.
    return x.is_rational() && y.is_rational() && x.residue_ == y.residue_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    if (m_ == 1 || is_rational()) {
        Cyclotomic r(residue_.coeff(0).inverse());
        r.m_ = m_;
        return r;
    }
    const auto ext = poly_xgcd(residue_, cyclotomic_polynomial(m_));
    // Phi_m is irreducible over Q, so the gcd with a nonzero residue of
    // smaller degree is a (monic) constant.
    if (ext.g.degree() != 0)
        throw std::logic_error("Cyclotomic: non-constant gcd with Phi_m");
    // ext.g == 1 after normalization: u * residue = 1 (mod Phi_m)
    return from_residue(m_, ext.u);
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic acc(Rational(1));
    acc.m_ = m_;
    Cyclotomic base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return residue_.coeff(0).str();
    std::ostringstream os;
    os << format_poly(residue_, "zeta" + std::to_string(m_));
    return os.str();
}

}  // namespace msection
