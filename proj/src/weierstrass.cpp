#include "qdl/weierstrass.hpp"

#include <limits>

namespace qdl {

namespace {

MPoly require_t_poly(const MPoly& p, const char* which) {
    if (!p.vars().subset_of(VarSet::only(Var::t)))
        fail(ErrorKind::Domain,
             std::string("coefficient ") + which + " must be a polynomial in t only");
    return p.embedded(VarSet::only(Var::t));
}

constexpr long kOrdInfinity = std::numeric_limits<long>::max();

long ord_or_infinity(const MPoly& p) { return p.is_zero() ? kOrdInfinity : p.ord_in(Var::t); }

MPoly tpoly_const(long c) {
    return MPoly::constant(VarSet::only(Var::t), GaussRational(Rational(c)));
}

}  // namespace

WeierstrassModel WeierstrassModel::make(MPoly a1, MPoly a2, MPoly a3, MPoly a4, MPoly a6) {
    WeierstrassModel m{require_t_poly(a1, "a1"), require_t_poly(a2, "a2"),
                       require_t_poly(a3, "a3"), require_t_poly(a4, "a4"),
                       require_t_poly(a6, "a6")};
    WeierstrassInvariants inv = invariants(m);
    if (inv.disc.is_zero())
        fail(ErrorKind::Domain, "degenerate model: discriminant vanishes identically");
    return m;
}

WeierstrassInvariants invariants(const WeierstrassModel& m) {
    WeierstrassInvariants v;
    v.b2 = m.a1 * m.a1 + tpoly_const(4) * m.a2;
    v.b4 = tpoly_const(2) * m.a4 + m.a1 * m.a3;
    v.b6 = m.a3 * m.a3 + tpoly_const(4) * m.a6;
    v.b8 = m.a1 * m.a1 * m.a6 + tpoly_const(4) * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
           m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
    v.c4 = v.b2 * v.b2 - tpoly_const(24) * v.b4;
    v.c6 = -(v.b2 * v.b2 * v.b2) + tpoly_const(36) * v.b2 * v.b4 - tpoly_const(216) * v.b6;
    v.disc = -(v.b2 * v.b2) * v.b8 - tpoly_const(8) * v.b4 * v.b4 * v.b4 -
             tpoly_const(27) * v.b6 * v.b6 + tpoly_const(9) * v.b2 * v.b4 * v.b6;
    v.j_num = v.c4 * v.c4 * v.c4;
    v.j_den = v.disc;
    return v;
}

long ord0(const MPoly& p) {
    if (p.is_zero()) fail(ErrorKind::Domain, "vanishing order of the zero polynomial");
    return p.ord_in(Var::t);
}

namespace {

bool reduction_possible(const WeierstrassModel& m) {
    WeierstrassInvariants v = invariants(m);
    if (ord_or_infinity(v.c4) < 4) return false;
    if (ord_or_infinity(v.c6) < 6) return false;
    if (ord_or_infinity(v.disc) < 12) return false;
    // The divisions a_i / t^i must stay polynomial.
    const std::pair<const MPoly*, long> checks[] = {
        {&m.a1, 1}, {&m.a2, 2}, {&m.a3, 3}, {&m.a4, 4}, {&m.a6, 6}};
    for (auto [p, k] : checks)
        if (!p->is_zero() && p->ord_in(Var::t) < k) return false;
    return true;
}

WeierstrassModel reduce_step(const WeierstrassModel& m) {
    auto div = [](const MPoly& p, std::uint32_t k) {
        return p.is_zero() ? p : p.divided_by_power(Var::t, k);
    };
    return WeierstrassModel{div(m.a1, 1), div(m.a2, 2), div(m.a3, 3), div(m.a4, 4),
                            div(m.a6, 6)};
}

}  // namespace

std::pair<WeierstrassModel, long> minimalize(const WeierstrassModel& m) {
    WeierstrassModel cur = m;
    long u_order = 0;
    while (reduction_possible(cur)) {
        cur = reduce_step(cur);
        ++u_order;
    }
    return {cur, u_order};
}

bool is_minimal(const WeierstrassModel& m) { return !reduction_possible(m); }

std::string KodairaType::name() const {
    switch (kind) {
        case KodairaKind::I0: return "I0";
        case KodairaKind::In: return "I" + std::to_string(n);
        case KodairaKind::II: return "II";
        case KodairaKind::III: return "III";
        case KodairaKind::IV: return "IV";
        case KodairaKind::I0star: return "I0*";
        case KodairaKind::Instar: return "I" + std::to_string(n) + "*";
        case KodairaKind::IVstar: return "IV*";
        case KodairaKind::IIIstar: return "III*";
        case KodairaKind::IIstar: return "II*";
    }
    return "?";
}

KodairaType kodaira_type(const WeierstrassModel& m) {
    if (!is_minimal(m))
        fail(ErrorKind::Domain, "kodaira type requires a minimal model; run minimalize first");
    WeierstrassInvariants v = invariants(m);
    long nc4 = ord_or_infinity(v.c4);
    long nc6 = ord_or_infinity(v.c6);
    long nd = ord0(v.disc);

    KodairaType k;
    k.euler_number = nd;
    auto set = [&](KodairaKind kind, int n, std::optional<DuVal> dv) {
        k.kind = kind;
        k.n = n;
        k.du_val = dv;
    };

    if (nd == 0) {
        set(KodairaKind::I0, 0, std::nullopt);
        return k;
    }
    if (nc4 == 0) {
        // Multiplicative reduction: I_n with n = ord disc; I1 has smooth
        // total space, I_n (n >= 2) an A_{n-1} point.
        int n = static_cast<int>(nd);
        std::optional<DuVal> dv;
        if (n >= 2) dv = DuVal{'A', n - 1, n - 1};
        set(KodairaKind::In, n, dv);
        return k;
    }
    // Additive types over a characteristic-zero base.
    if (nd == 2) {
        set(KodairaKind::II, 0, std::nullopt);
        return k;
    }
    if (nd == 3) {
        set(KodairaKind::III, 0, DuVal{'A', 1, 1});
        return k;
    }
    if (nd == 4) {
        set(KodairaKind::IV, 0, DuVal{'A', 2, 2});
        return k;
    }
    if (nd == 6) {
        set(KodairaKind::I0star, 0, DuVal{'D', 4, 4});
        return k;
    }
    if (nd >= 7 && nc4 == 2 && nc6 == 3) {
        int n = static_cast<int>(nd - 6);
        set(KodairaKind::Instar, n, DuVal{'D', 4 + n, 4 + n});
        return k;
    }
    if (nd == 8) {
        set(KodairaKind::IVstar, 0, DuVal{'E', 6, 6});
        return k;
    }
    if (nd == 9) {
        set(KodairaKind::IIIstar, 0, DuVal{'E', 7, 7});
        return k;
    }
    if (nd == 10) {
        set(KodairaKind::IIstar, 0, DuVal{'E', 8, 8});
        return k;
    }
    fail(ErrorKind::Internal,
         "unclassified minimal reduction data (ord c4, ord c6, ord disc) = (" +
             std::to_string(nc4) + ", " + std::to_string(nc6) + ", " + std::to_string(nd) + ")");
}

DeltaFCheck delta_f_check(const WeierstrassModel& m) {
    KodairaType k = kodaira_type(m);
    DeltaFCheck c;
    c.ord_delta = k.euler_number;
    c.mu_duval = k.du_val ? k.du_val->mu : 0;
    switch (k.kind) {
        case KodairaKind::I0: c.chi_fiber_diff = 0; break;
        case KodairaKind::In: c.chi_fiber_diff = 1; break;  // nodal cubic
        default: c.chi_fiber_diff = 2; break;               // cuspidal cubic
    }
    c.consistent = (c.ord_delta == c.mu_duval + c.chi_fiber_diff);
    return c;
}

}  // namespace qdl
