#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msection/rational.hpp"

namespace msection {

/// Dense polynomial over a commutative ring K, coefficients stored in
/// ascending power order with no trailing zeros (zero polynomial = empty).
///
/// K must provide: default construction (zero), construction from long,
/// +=, -=, *, unary -, ==, and is_zero().
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(int scalar) : Poly(static_cast<long>(scalar)) {}
    Poly(long scalar) {
        K v(scalar);
        if (!v.is_zero()) c_.push_back(std::move(v));
    }
    Poly(const K& scalar) {
        if (!scalar.is_zero()) c_.push_back(scalar);
    }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly monomial(std::size_t k, const K& coeff = K(1)) {
        Poly p;
        if (!coeff.is_zero()) {
            p.c_.assign(k + 1, K());
            p.c_[k] = coeff;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(); }
    const K& leading() const {
        if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }

    void set_coeff(std::size_t k, const K& v) {
        if (k >= c_.size()) {
            if (v.is_zero()) return;
            c_.resize(k + 1, K());
        }
        c_[k] = v;
        trim();
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& operator*=(const K& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c = c * s;
        trim();
        return *this;
    }
    friend Poly operator*(Poly a, const K& s) { return a *= s; }
    friend Poly operator*(const K& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Horner evaluation at a point of K.
    K eval(const K& x) const {
        K acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Composition this(g).
    Poly compose(const Poly& g) const {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
        return acc;
    }

    /// Multiplication by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Poly r;
        r.c_.assign(c_.size() + k, K());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

private:
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Polynomial in one indeterminate over Q. Used for both x- and
/// y-polynomials; formatting helpers take the variable name.
using UniPoly = Poly<Rational>;

/// Polynomial in x whose coefficients are polynomials in y.
using BiPoly = Poly<UniPoly>;

// ---- Euclidean operations (field coefficients) ----

template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    Poly<K> rem = a, quot;
    const K inv_lead = K(1) / b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const K factor = rem.leading() * inv_lead;
        quot.set_coeff(shift, factor);
        rem -= b.shifted(shift) * factor;
    }
    return {quot, rem};
}

/// Quotient a/b; throws when the division is not exact.
template <class K>
Poly<K> poly_exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("poly_exact_div: inexact division");
    return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a *= K(1) / a.leading();
    return a;
}

template <class K>
struct PolyXgcd {
    Poly<K> g, u, v;  // g = u*a + v*b, g monic unless zero
};

template <class K>
PolyXgcd<K> poly_xgcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0(1), u1, v0, v1(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<K> u2 = u0 - q * u1;
        Poly<K> v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        const K inv = K(1) / r0.leading();
        r0 *= inv;
        u0 *= inv;
        v0 *= inv;
    }
    return {r0, u0, v0};
}

// ---- formatting ----

std::string format_poly(const UniPoly& p, const std::string& var);
std::string format_bipoly(const BiPoly& p, const std::string& xvar = "x",
                          const std::string& yvar = "y");

/// Coefficients of p as decimal strings, lowest power first.
std::vector<std::string> coeff_strings(const UniPoly& p);

}  // namespace msection
