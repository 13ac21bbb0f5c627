#include "qdl/resultant.hpp"

namespace qdl {

MPoly mpoly_det(std::vector<std::vector<MPoly>> m) {
    std::size_t n = m.size();
    if (n == 0) return MPoly::constant(VarSet::none(), GaussRational(1));
    if (n == 1) return m[0][0];
    MPoly acc = MPoly::zero(VarSet::none());
    for (std::size_t k = 0; k < n; ++k) {
        if (m[0][k].is_zero()) continue;
        std::vector<std::vector<MPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MPoly> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        MPoly term = m[0][k] * mpoly_det(std::move(minor));
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

MPoly resultant(const MPoly& p, const MPoly& q, Var elim) {
    if (p.is_zero() || q.is_zero())
        fail(ErrorKind::Domain, "resultant of the zero polynomial");
    long dp = p.degree_in(elim), dq = q.degree_in(elim);
    VarSet rest;
    for (Var v : p.vars().united(q.vars()).vars())
        if (v != elim) rest = rest.with(v);

    auto coeff_of = [&](const MPoly& f, long k) {
        MPoly c(rest);
        for (const auto& [m, coef] : f.terms()) {
            if (static_cast<long>(m[elim]) != k) continue;
            Monomial n = m;
            n.e[static_cast<int>(elim)] = 0;
            c += MPoly::term(rest, n, coef);
        }
        return c;
    };

    if (dp == 0 && dq == 0) return MPoly::constant(rest, GaussRational(1));
    if (dq == 0) return q.embedded(rest).pow(static_cast<unsigned>(dp));
    if (dp == 0) return p.embedded(rest).pow(static_cast<unsigned>(dq));

    std::size_t n = static_cast<std::size_t>(dp + dq);
    std::vector<std::vector<MPoly>> s(n, std::vector<MPoly>(n, MPoly::zero(rest)));
    for (long r = 0; r < dq; ++r)
        for (long k = 0; k <= dp; ++k)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + dp - k)] = coeff_of(p, k);
    for (long r = 0; r < dp; ++r)
        for (long k = 0; k <= dq; ++k)
            s[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + dq - k)] =
                coeff_of(q, k);
    return mpoly_det(std::move(s));
}

}  // namespace qdl
