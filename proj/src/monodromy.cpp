#include "qdl/monodromy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qdl {

namespace {

// Integer univariate helpers for the cyclotomic assembly.
using ZPoly = std::vector<Int>;  // ascending

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division, remainder asserted zero.
ZPoly zdiv(ZPoly num, const ZPoly& den) {
    ZPoly q(num.size() - den.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Int c = num[k + den.size() - 1] / den.back();
        q[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) fail(ErrorKind::Internal, "non-exact cyclotomic division");
    return q;
}

Rational frac_mod_one(const Rational& q) {
    Rational r = q - Rational(rational_floor(q));
    return r;  // in [0, 1)
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(unsigned long n) {
    static std::map<unsigned long, ZPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by the product of the proper-divisor cyclotomics.
    ZPoly xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    ZPoly divisor{Int(1)};
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0) divisor = zmul(divisor, cyclotomic_polynomial(d));
    ZPoly phi = zdiv(xn, divisor);
    cache[n] = phi;
    return phi;
}

Spectrum spectrum_quasihomogeneous(const MPoly& f) {
    auto w = quasi_homogeneous_weights(f);
    if (!w)
        fail(ErrorKind::Unsupported,
             "germ is not quasi-homogeneous in the given coordinates; the spectrum "
             "formula from weighted degrees does not apply");
    MilnorData md = milnor_number(f);
    if (!md.mu.finite)
        fail(ErrorKind::Unsupported, "spectrum requires a finite Milnor number");

    Spectrum s;
    for (const auto& m : md.algebra_basis)
        s.values.push_back(Rational(m[Var::x] + 1) * w->w1 + Rational(m[Var::y] + 1) * w->w2);
    std::sort(s.values.begin(), s.values.end());
    return s;
}

MonodromyData monodromy_eigenvalues(const MPoly& f) {
    Spectrum s = spectrum_quasihomogeneous(f);

    MonodromyData data;
    for (const auto& sigma : s.values) data.eigenvalue_args.push_back(frac_mod_one(sigma));
    std::sort(data.eigenvalue_args.begin(), data.eigenvalue_args.end());

    // Group the argument multiset into full primitive orbits {k/n : gcd(k,n)=1};
    // each complete orbit contributes one cyclotomic factor.
    std::map<Rational, long> pool;
    for (const auto& a : data.eigenvalue_args) pool[a] += 1;
    ZPoly charpoly{Int(1)};
    while (!pool.empty()) {
        Rational a = pool.begin()->first;
        unsigned long n = rational_den(a).convert_to<unsigned long>();
        for (unsigned long k = 0; k < n; ++k) {
            if (std::gcd(k, n) != 1 && !(n == 1 && k == 0)) continue;
            Rational member = Rational(Int(k), Int(n));
            auto it = pool.find(member);
            if (it == pool.end() || it->second == 0)
                fail(ErrorKind::Internal,
                     "eigenvalue arguments do not close under the Galois action; "
                     "quasi-homogeneous spectra should always assemble into cyclotomic orbits");
            if (--it->second == 0) pool.erase(it);
        }
        charpoly = zmul(charpoly, cyclotomic_polynomial(n));
    }
    data.char_poly = charpoly;

    // r with exp(pi i r) an eigenvalue: reduce 2*sigma into [0,2); the value 0
    // (eigenvalue 1) is excluded from the open interval and counted apart.
    std::vector<Rational> rset;
    for (const auto& sigma : s.values) {
        Rational two_sigma = sigma * 2;
        Rational r = two_sigma - Rational(2 * ((rational_floor(two_sigma)) / 2));
        if (r >= 2) r -= 2;
        if (r == 0) {
            data.unit_eigenvalue_count += 1;
        } else {
            rset.push_back(r);
        }
    }
    std::sort(rset.begin(), rset.end());
    rset.erase(std::unique(rset.begin(), rset.end()), rset.end());
    data.barlet_exponents = rset;
    return data;
}

}  // namespace qdl
