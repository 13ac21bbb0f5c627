#include "qdl/local_algebra.hpp"

#include <algorithm>
#include <deque>

namespace qdl {

namespace {

long ecart(const MPoly& p, TermOrder order) {
    // Degree gap between the polynomial and its leading monomial; zero for
    // homogeneous polynomials and for global orders on single terms.
    return p.total_degree() - p.leading_term(order).first.total_degree();
}

void check_degree_cap(const MPoly& p) {
    if (p.total_degree() > kDegreeCap)
        fail(ErrorKind::Limit,
             "intermediate polynomial exceeded the degree cap (" + std::to_string(kDegreeCap) +
                 "); input is outside desk scale");
}

// h - (lc(h)/lc(f)) * (lm(h)/lm(f)) * f
MPoly reduce_once(const MPoly& h, const MPoly& f, TermOrder order) {
    auto [hm, hc] = h.leading_term(order);
    auto [fm, fc] = f.leading_term(order);
    Monomial q = fm.quotient_into(hm);
    MPoly scaled = f.scaled(hc / fc);
    MPoly shifted = MPoly::term(h.vars().united(f.vars()), q, GaussRational(1)) * scaled;
    MPoly r = h - shifted;
    check_degree_cap(r);
    return r;
}

MPoly spoly(const MPoly& f, const MPoly& g, TermOrder order) {
    auto [fm, fc] = f.leading_term(order);
    auto [gm, gc] = g.leading_term(order);
    Monomial l = Monomial::lcm(fm, gm);
    VarSet ctx = f.vars().united(g.vars());
    MPoly a = MPoly::term(ctx, fm.quotient_into(l), GaussRational(1) / fc) * f;
    MPoly b = MPoly::term(ctx, gm.quotient_into(l), GaussRational(1) / gc) * g;
    MPoly r = a - b;
    check_degree_cap(r);
    return r;
}

std::vector<Monomial> minimal_staircase(const std::vector<MPoly>& gens, TermOrder order) {
    std::vector<Monomial> lead;
    for (const auto& g : gens) lead.push_back(g.leading_term(order).first);
    std::sort(lead.begin(), lead.end());
    lead.erase(std::unique(lead.begin(), lead.end()), lead.end());
    std::vector<Monomial> minimal;
    for (const auto& m : lead) {
        bool redundant = false;
        for (const auto& other : lead)
            if (!(other == m) && other.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(m);
    }
    return minimal;
}

}  // namespace

MPoly mora_normal_form(const MPoly& g, const std::vector<MPoly>& basis, TermOrder order) {
    if (basis.empty()) return g;
    std::vector<MPoly> reducers = basis;  // grows: Mora adds intermediate remainders
    MPoly h = g;
    while (!h.is_zero()) {
        Monomial hm = h.leading_term(order).first;
        long best = -1;
        long best_ecart = 0;
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            if (!reducers[i].leading_term(order).first.divides(hm)) continue;
            long e = ecart(reducers[i], order);
            if (best < 0 || e < best_ecart) {  // ties resolve to the oldest entry
                best = static_cast<long>(i);
                best_ecart = e;
            }
        }
        if (best < 0) break;
        if (best_ecart > ecart(h, order)) reducers.push_back(h);
        h = reduce_once(h, reducers[static_cast<std::size_t>(best)], order);
    }
    return h;
}

StandardBasis standard_basis(const std::vector<MPoly>& gens) {
    const TermOrder order = TermOrder::LocalDegRevLex;
    std::vector<MPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        check_degree_cap(g);
        // Monic generators keep coefficient growth in check.
        basis.push_back(g.scaled(GaussRational(1) / g.leading_term(order).second));
    }
    if (basis.empty()) fail(ErrorKind::Domain, "standard basis of the zero ideal");

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        // Normal selection: smallest lcm degree first, deterministic tie-break.
        auto pick = pairs.begin();
        auto lcm_deg = [&](const std::pair<std::size_t, std::size_t>& p) {
            return Monomial::lcm(basis[p.first].leading_term(order).first,
                                 basis[p.second].leading_term(order).first)
                .total_degree();
        };
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
            if (lcm_deg(*it) < lcm_deg(*pick)) pick = it;
        auto [i, j] = *pick;
        pairs.erase(pick);

        MPoly s = spoly(basis[i], basis[j], order);
        if (s.is_zero()) continue;
        MPoly h = mora_normal_form(s, basis, order);
        if (h.is_zero()) continue;
        h = h.scaled(GaussRational(1) / h.leading_term(order).second);
        basis.push_back(h);
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    StandardBasis sb;
    sb.generators = basis;
    sb.order = order;
    sb.leading_staircase = minimal_staircase(basis, order);
    return sb;
}

std::optional<std::vector<Monomial>> monomials_under_staircase(
    const std::vector<Monomial>& staircase) {
    // Finite colength in two variables requires pure powers of both x and y
    // in the leading-term ideal.
    std::optional<std::uint32_t> xbound, ybound;
    for (const auto& m : staircase) {
        if (m[Var::t] != 0) fail(ErrorKind::Internal, "staircase expected in x, y");
        if (m[Var::y] == 0) xbound = xbound ? std::min(*xbound, m[Var::x]) : m[Var::x];
        if (m[Var::x] == 0) ybound = ybound ? std::min(*ybound, m[Var::y]) : m[Var::y];
    }
    if (!xbound || !ybound) return std::nullopt;

    std::vector<Monomial> under;
    for (std::uint32_t a = 0; a < *xbound; ++a) {
        for (std::uint32_t b = 0; b < *ybound; ++b) {
            Monomial m(a, b);
            bool inside = false;
            for (const auto& s : staircase)
                if (s.divides(m)) {
                    inside = true;
                    break;
                }
            if (!inside) under.push_back(m);
        }
    }
    std::sort(under.begin(), under.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a[Var::x] > b[Var::x];  // x before y within a degree
    });
    return under;
}

namespace {

void check_germ(const MPoly& f) {
    if (f.is_zero()) fail(ErrorKind::Domain, "zero polynomial is not a germ");
    if (!f.vars().subset_of(VarSet::xy()))
        fail(ErrorKind::Domain, "germ invariants expect a polynomial in x, y");
    if (!f.constant_term().is_zero())
        fail(ErrorKind::Domain, "germ must vanish at the origin (nonzero constant term)");
}

CountOrInf colength_of(const std::vector<MPoly>& gens, std::vector<Monomial>* basis_out) {
    std::vector<MPoly> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return CountOrInf::infinite();
    StandardBasis sb = standard_basis(nonzero);
    auto under = monomials_under_staircase(sb.leading_staircase);
    if (!under) return CountOrInf::infinite();
    if (basis_out) *basis_out = *under;
    return CountOrInf::of(static_cast<long>(under->size()));
}

}  // namespace

MilnorData milnor_number(const MPoly& f) {
    check_germ(f);
    MPoly fx = f.derivative(Var::x);
    MPoly fy = f.derivative(Var::y);

    MilnorData data;
    data.mu = colength_of({fx, fy}, &data.algebra_basis);
    if (!data.mu.finite) {
        data.algebra_basis.clear();
        data.tjurina = CountOrInf::infinite();
        return data;
    }
    data.tjurina = colength_of({f, fx, fy}, nullptr);
    return data;
}

CountOrInf tjurina_number(const MPoly& f) {
    check_germ(f);
    return colength_of({f, f.derivative(Var::x), f.derivative(Var::y)}, nullptr);
}

}  // namespace qdl
