#include "msection/poly.hpp"

#include <sstream>

namespace msection {

namespace {

// One monomial like "3*x^2", "x", "-1/2"; sign handled by the caller.
std::string monomial_str(const Rational& c, std::size_t k, const std::string& var) {
    const Rational mag = c.sign() < 0 ? -c : c;
    std::ostringstream os;
    if (k == 0) {
        os << mag.str();
    } else {
        if (!mag.is_one()) os << mag.str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace

std::string format_poly(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rational& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        os << monomial_str(c, k, var);
    }
    return os.str();
}

std::string format_bipoly(const BiPoly& p, const std::string& xvar, const std::string& yvar) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const UniPoly& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool plain = c.degree() <= 0 || k == 0;
        if (k == 0) {
            os << format_poly(c, yvar);
            continue;
        }
        if (c.degree() == 0 && c.coeff(0).is_one()) {
            // bare power of x
        } else if (plain) {
            os << format_poly(c, yvar) << "*";
        } else {
            os << "(" << format_poly(c, yvar) << ")*";
        }
        os << xvar;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::vector<std::string> coeff_strings(const UniPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

}  // namespace msection
