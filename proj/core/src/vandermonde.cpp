#include "msection/vandermonde.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "msection/series.hpp"

namespace msection {

std::vector<RootOfUnity> roots_of_unity(long m) {
    if (m < 1) throw std::invalid_argument("roots_of_unity: m must be >= 1");
    std::vector<RootOfUnity> roots;
    roots.reserve(static_cast<std::size_t>(m));
    for (long k = 0; k < m; ++k) roots.push_back({m, k, Cyclotomic::zeta(m, k)});
    return roots;
}

std::vector<Cyclotomic> elementary_symmetric_all(const std::vector<Cyclotomic>& xs) {
    // coefficients of prod (1 + x_i t) in t
    std::vector<Cyclotomic> e(xs.size() + 1, Cyclotomic(0L));
    e[0] = Cyclotomic(1L);
    std::size_t used = 0;
    for (const auto& x : xs) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] = e[k] + x * e[k - 1];
    }
    return e;
}

Cyclotomic elementary_symmetric_enumerated(const std::vector<Cyclotomic>& xs, std::size_t k) {
    if (k > xs.size()) return Cyclotomic(0L);
    if (k == 0) return Cyclotomic(1L);
    const std::size_t n = xs.size();
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    Cyclotomic total(0L);
    while (true) {
        Cyclotomic prod(1L);
        for (auto i : idx) prod = prod * xs[i];
        total = total + prod;
        // advance to the next k-combination in lexicographic order
        std::size_t pos = k;
        bool exhausted = true;
        while (pos-- > 0) {
            if (idx[pos] < n - k + pos) {
                exhausted = false;
                break;
            }
        }
        if (exhausted) return total;
        ++idx[pos];
        for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

namespace {

// sum_j scalars[l][j] * w^{j l'} must be the Kronecker delta; the x-powers
// x^{-l} and x^{l'} cancel exactly on the diagonal.
bool forward_product_is_identity(const VandermondeInverse& inv,
                                 const std::vector<RootOfUnity>& roots) {
    const long m = inv.m;
    for (long l = 0; l < m; ++l) {
        for (long lp = 0; lp < m; ++lp) {
            Cyclotomic acc(0L);
            for (long j = 0; j < m; ++j)
                acc = acc + inv.scalars[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] *
                                roots[static_cast<std::size_t>((j * lp) % m)].value;
            const Cyclotomic expected(l == lp ? 1L : 0L);
            if (!(acc == expected)) return false;
        }
    }
    return true;
}

}  // namespace

VandermondeInverse build_inverse(long m) {
    if (m < 1) throw std::invalid_argument("build_inverse: m must be >= 1");
    const auto roots = roots_of_unity(m);

    VandermondeInverse inv;
    inv.m = m;
    inv.scalars.assign(static_cast<std::size_t>(m),
                       std::vector<Cyclotomic>(static_cast<std::size_t>(m), Cyclotomic(0L)));

    for (long j = 0; j < m; ++j) {
        // P(m,j): all roots except w^j
        std::vector<Cyclotomic> others;
        others.reserve(static_cast<std::size_t>(m - 1));
        for (long i = 0; i < m; ++i)
            if (i != j) others.push_back(roots[static_cast<std::size_t>(i)].value);

        // DN without its x^{m-1} factor (cancels against the numerator)
        Cyclotomic dn(1L);
        for (const auto& w : others) dn = dn * (w - roots[static_cast<std::size_t>(j)].value);

        const auto elem = elementary_symmetric_all(others);
        const Cyclotomic dn_inv = dn.inverse();
        for (long l = 0; l < m; ++l) {
            Cyclotomic num = elem[static_cast<std::size_t>(m - 1 - l)];
            if (l % 2 != 0) num = -num;
            inv.scalars[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] = num * dn_inv;
        }
    }

    if (!forward_product_is_identity(inv, roots))
        throw std::logic_error("build_inverse: forward product is not the identity");
    return inv;
}

namespace {

using CycloPoly = Poly<Cyclotomic>;

CycloPoly lift(const UniPoly& p) {
    std::vector<Cyclotomic> coeffs;
    coeffs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs.emplace_back(c);
    return CycloPoly(std::move(coeffs));
}

// p(w * x) for a fixed root of unity w
CycloPoly twist(const CycloPoly& p, const Cyclotomic& w) {
    std::vector<Cyclotomic> coeffs(p.coeffs());
    Cyclotomic w_pow(1L);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        coeffs[k] = coeffs[k] * w_pow;
        w_pow = w_pow * w;
    }
    return CycloPoly(std::move(coeffs));
}

// Collapses a polynomial supported on exponents congruent to offset mod m:
// coefficient of x^{offset + t*m} becomes coefficient of x^t. Every
// coefficient must be rational. Throws std::logic_error otherwise.
UniPoly collapse(const CycloPoly& p, long m, long offset, const char* what) {
    UniPoly out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Cyclotomic& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        if (!c.is_rational())
            throw std::logic_error(std::string("section_via_filter: non-rational coefficient in ") +
                                   what);
        const long idx = static_cast<long>(k);
        if ((idx - offset) % m != 0 || idx < offset)
            throw std::logic_error(std::string("section_via_filter: stray x-power in ") + what);
        out.set_coeff(static_cast<std::size_t>((idx - offset) / m), c.to_rational());
    }
    return out;
}

}  // namespace

RationalOGF section_via_filter(const RationalOGF& ogf, long m, long l, long sanity_terms) {
    if (m < 1) throw std::invalid_argument("section_via_filter: m must be >= 1");
    if (l < 0 || l >= m) throw std::invalid_argument("section_via_filter: l out of range [0, m)");
    if (ogf.den.coeff(0).is_zero())
        throw std::invalid_argument("section_via_filter: denominator constant term is zero");

    const auto roots = roots_of_unity(m);
    // building (and re-verifying) the inverse is pure in m; cache it
    static std::mutex cache_mu;
    static std::map<long, VandermondeInverse> cache;
    VandermondeInverse inv;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find(m);
        if (it == cache.end()) it = cache.emplace(m, build_inverse(m)).first;
        inv = it->second;
    }

    const CycloPoly num = lift(ogf.num);
    const CycloPoly den = lift(ogf.den);

    std::vector<CycloPoly> num_j, den_j;
    num_j.reserve(static_cast<std::size_t>(m));
    den_j.reserve(static_cast<std::size_t>(m));
    for (long j = 0; j < m; ++j) {
        num_j.push_back(twist(num, roots[static_cast<std::size_t>(j)].value));
        den_j.push_back(twist(den, roots[static_cast<std::size_t>(j)].value));
    }

    // Common denominator D = prod_j den_j and the partial products
    // D / den_j, via prefix/suffix arrays.
    const std::size_t mm = static_cast<std::size_t>(m);
    std::vector<CycloPoly> prefix(mm + 1, CycloPoly(1)), suffix(mm + 1, CycloPoly(1));
    for (std::size_t j = 0; j < mm; ++j) prefix[j + 1] = prefix[j] * den_j[j];
    for (std::size_t j = mm; j-- > 0;) suffix[j] = suffix[j + 1] * den_j[j];
    const CycloPoly common_den = prefix[mm];

    CycloPoly combined;
    for (std::size_t j = 0; j < mm; ++j) {
        const CycloPoly rest = prefix[j] * suffix[j + 1];
        combined += (num_j[j] * rest) * inv.scalars[static_cast<std::size_t>(l)][j];
    }

    const UniPoly den_x = collapse(common_den, m, 0, "denominator");
    const UniPoly num_x = collapse(combined, m, l, "numerator");
    RationalOGF result = reduce_ogf(num_x, den_x);

    // series sanity check against direct sectioning of the input expansion
    if (sanity_terms > 0) {
        const SeriesPrefix direct = section_terms(expand(ogf, sanity_terms), m, l);
        if (!direct.coeffs.empty()) {
            const SeriesPrefix filtered = expand(result, direct.size());
            if (filtered.coeffs != direct.coeffs)
                throw std::logic_error("section_via_filter: series cross-check failed");
        }
    }
    return result;
}

}  // namespace msection
