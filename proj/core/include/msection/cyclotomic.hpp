#pragma once

#include <stdexcept>
#include <string>

#include "msection/poly.hpp"
#include "msection/rational.hpp"

namespace msection {

unsigned long euler_phi(unsigned long m);

/// The m-th cyclotomic polynomial Phi_m: monic, integer coefficients,
/// prod_{d | m} Phi_d = x^m - 1. Throws on m < 1. Results are cached.
UniPoly cyclotomic_polynomial(long m);

/// Element of Q(zeta_m), represented by its residue polynomial modulo
/// Phi_m (degree < phi(m)). Conductor 1 elements are plain rationals and
/// combine with any conductor.
class Cyclotomic {
public:
    Cyclotomic() : m_(1) {}
    Cyclotomic(int v) : m_(1), residue_(static_cast<long>(v)) {}
    Cyclotomic(long v) : m_(1), residue_(v) {}
    Cyclotomic(const Rational& v) : m_(1), residue_(v) {}

    /// zeta_m^k (k may be any integer; it is reduced mod m).
    static Cyclotomic zeta(long m, long k = 1);

    /// Reduces an arbitrary polynomial in zeta_m.
    static Cyclotomic from_residue(long m, const UniPoly& poly);

    long conductor() const { return m_; }
    const UniPoly& residue() const { return residue_; }

    bool is_zero() const { return residue_.is_zero(); }
    bool is_rational() const { return residue_.degree() <= 0; }
    Rational to_rational() const {
        if (!is_rational())
            throw std::domain_error("Cyclotomic: value is not rational");
        return residue_.coeff(0);
    }

    friend Cyclotomic operator+(Cyclotomic x, Cyclotomic y);
    friend Cyclotomic operator-(Cyclotomic x, Cyclotomic y);
    friend Cyclotomic operator*(Cyclotomic x, Cyclotomic y);
    friend Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y);
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(Cyclotomic x, Cyclotomic y);
    friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// (residue, Phi_m) over Q. Throws std::domain_error on zero.
    Cyclotomic inverse() const;

    Cyclotomic pow(long e) const;

    std::string str() const;

private:
    long m_;
    UniPoly residue_;

    Cyclotomic(long m, UniPoly residue) : m_(m), residue_(std::move(residue)) {}

    // Conductor-1 (i.e. rational) values adopt the other operand's field.
    static void align(Cyclotomic& x, Cyclotomic& y);
};

/// Inverse of z in Q(zeta_m); free-function spelling of z.inverse().
inline Cyclotomic cyclo_invert(const Cyclotomic& z) { return z.inverse(); }

}  // namespace msection
