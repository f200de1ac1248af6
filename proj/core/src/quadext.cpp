#include "msection/quadext.hpp"

#include <sstream>

namespace msection {

std::string QuadExt::str() const {
    std::ostringstream os;
    os << a_.str();
    if (!b_.is_zero()) {
        os << (b_.sign() < 0 ? " - " : " + ");
        const Rational mag = b_.sign() < 0 ? -b_ : b_;
        if (!mag.is_one()) os << mag.str() << "*";
        os << "sqrt(" << d_.get_str() << ")";
    }
    return os.str();
}

Rational quad_binet(const Int& r, const Int& s, long n) {
    if (r == 0 || s == 0) throw std::invalid_argument("quad_binet: r and s must be nonzero");
    if (n < 0) throw std::invalid_argument("quad_binet: n must be >= 0");
    const Int d = r * r + 4 * s;
    if (d == 0) throw std::domain_error("quad_binet: degenerate discriminant");

    const Rational half(Int(1), Int(2));
    const QuadExt lambda{Rational(r) * half, -half, d};   // (r - sqrt(D))/2
    const QuadExt mu{Rational(r) * half, half, d};        // -s/lambda = (r + sqrt(D))/2
    const QuadExt denom = lambda - mu;                    // -sqrt(D)
    const QuadExt value =
        (lambda.pow(static_cast<unsigned long>(n)) - mu.pow(static_cast<unsigned long>(n))) / denom;
    return value.rational_part();
}

}  // namespace msection
