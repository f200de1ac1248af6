#pragma once

#include <stdexcept>
#include <string>

#include "msection/rational.hpp"

namespace msection {

/// Element a + b*sqrt(D) of the quadratic extension Q(sqrt(D)).
/// sqrt(D) stays a formal symbol even when D is a perfect square;
/// rational_part() collapses when b = 0.
class QuadExt {
public:
    QuadExt(Rational a, Rational b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ == 0) throw std::domain_error("QuadExt: D must be nonzero");
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Int& d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    Rational rational_part() const {
        if (!is_rational()) throw std::domain_error("QuadExt: sqrt component nonzero");
        return a_;
    }

    /// Collapses b*sqrt(D) into the rational part when D is a perfect
    /// square; otherwise returns the value unchanged. sqrt(D) stays
    /// formal until this is requested.
    QuadExt normalized() const {
        if (b_.is_zero() || d_ < 0) return *this;
        Int root;
        mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
        if (root * root != d_) return *this;
        return {a_ + b_ * Rational(root), Rational(0), d_};
    }

    /// a^2 - D b^2; multiplicative.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check_same(x, y);
        return {x.a_ + y.a_, x.b_ + y.b_, x.d_};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        check_same(x, y);
        return {x.a_ - y.a_, x.b_ - y.b_, x.d_};
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check_same(x, y);
        const Rational d(x.d_);
        return {x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.d_};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        check_same(x, y);
        const Rational n = y.norm();
        if (n.is_zero()) throw std::domain_error("QuadExt: division by zero-norm element");
        // conjugate / norm
        const QuadExt conj{y.a_, -y.b_, y.d_};
        QuadExt prod = x * conj;
        return {prod.a_ / n, prod.b_ / n, x.d_};
    }
    QuadExt operator-() const { return {-a_, -b_, d_}; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    QuadExt pow(unsigned long e) const {
        QuadExt acc{Rational(1), Rational(0), d_};
        QuadExt base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const;

private:
    Rational a_, b_;
    Int d_;

    static void check_same(const QuadExt& x, const QuadExt& y) {
        if (x.d_ != y.d_) throw std::invalid_argument("QuadExt: mixed radicands");
    }
};

/// H01(r,s;n) through the closed form over Q(sqrt(r^2+4s)):
/// (lambda^n - mu^n) / (lambda - mu) with lambda = (r - sqrt(D))/2 and
/// mu = -s/lambda. Requires n >= 0 and D != 0.
Rational quad_binet(const Int& r, const Int& s, long n);

}  // namespace msection
