#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdl/parse.hpp"
#include "qdl/weierstrass.hpp"

using namespace qdl;

namespace {

MPoly T(const std::string& s) { return parse_poly(s).embedded(VarSet::only(Var::t)); }

WeierstrassModel model(const std::string& a1, const std::string& a2, const std::string& a3,
                       const std::string& a4, const std::string& a6) {
    return WeierstrassModel::make(T(a1), T(a2), T(a3), T(a4), T(a6));
}

WeierstrassModel a46(const std::string& a4, const std::string& a6) {
    return model("0", "0", "0", a4, a6);
}

}  // namespace

TEST_CASE("invariants: short-model discriminant and spec examples") {
    SUBCASE("a6 = t^k gives disc = -432 t^{2k}") {
        WeierstrassInvariants v = invariants(a46("0", "t^2"));
        CHECK(v.disc == T("-432 t^4"));
        CHECK(ord0(v.disc) == 4);
    }
    SUBCASE("a4 = -3, a6 = 2 + t") {
        WeierstrassInvariants v = invariants(a46("-3", "2 + t"));
        CHECK(v.disc == T("-432(4t + t^2)"));
        CHECK(ord0(v.disc) == 1);
    }
    SUBCASE("a4 = 1, a6 = 0: smooth family") {
        WeierstrassInvariants v = invariants(a46("1", "0"));
        CHECK(v.disc == T("-64"));
        CHECK(ord0(v.disc) == 0);
    }
    SUBCASE("degenerate model rejected") {
        CHECK_THROWS_AS(a46("0", "0"), Error);
    }
}

TEST_CASE("1728 disc = c4^3 - c6^2 on random models") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> c(-3, 3);
    std::uniform_int_distribution<int> e(0, 2);
    auto rand_t = [&]() {
        MPoly p = MPoly::zero(VarSet::only(Var::t));
        for (int k = 0; k < 3; ++k)
            p += MPoly::term(VarSet::only(Var::t), Monomial(0, 0, e(rng)),
                             GaussRational(Rational(c(rng))));
        return p;
    };
    int built = 0;
    while (built < 25) {
        MPoly a1 = rand_t(), a2 = rand_t(), a3 = rand_t(), a4 = rand_t(), a6 = rand_t();
        WeierstrassModel m{a1, a2, a3, a4, a6};
        WeierstrassInvariants v = invariants(m);
        if (v.disc.is_zero()) continue;
        CHECK(MPoly::constant(VarSet::only(Var::t), GaussRational(1728)) * v.disc ==
              v.c4 * v.c4 * v.c4 - v.c6 * v.c6);
        CHECK(v.b8.scaled(GaussRational(4)) == v.b2 * v.b6 - v.b4 * v.b4);
        ++built;
    }
}

TEST_CASE("ord0") {
    CHECK(ord0(T("-432 t^4")) == 4);
    CHECK(ord0(T("4t + t^2")) == 1);
    CHECK(ord0(T("7")) == 0);
    CHECK_THROWS_AS(ord0(MPoly::zero(VarSet::only(Var::t))), Error);
}

TEST_CASE("minimalize") {
    SUBCASE("a6 = t^12 reduces twice") {
        auto [m, u] = minimalize(a46("0", "t^12"));
        CHECK(u == 2);
        CHECK(m.a6 == T("1"));
        CHECK(ord0(invariants(m).disc) == 0);
    }
    SUBCASE("a6 = t is already minimal") {
        auto [m, u] = minimalize(a46("0", "t"));
        CHECK(u == 0);
        CHECK(m.a6 == T("t"));
    }
    SUBCASE("a6 = t^5 is minimal (ord disc = 10 < 12)") {
        auto [m, u] = minimalize(a46("0", "t^5"));
        CHECK(u == 0);
        CHECK(ord0(invariants(m).disc) == 10);
    }
    SUBCASE("idempotent") {
        auto [m, u] = minimalize(a46("0", "t^13"));
        (void)u;
        auto [m2, u2] = minimalize(m);
        CHECK(u2 == 0);
        CHECK(m2.a6 == m.a6);
    }
}

TEST_CASE("kodaira types") {
    auto type_of = [&](const WeierstrassModel& m) { return kodaira_type(m); };
    SUBCASE("good reduction") {
        KodairaType k = type_of(a46("1", "0"));
        CHECK(k.kind == KodairaKind::I0);
        CHECK(!k.du_val);
    }
    SUBCASE("II for a6 = t, smooth total space") {
        KodairaType k = type_of(a46("0", "t"));
        CHECK(k.kind == KodairaKind::II);
        CHECK(k.euler_number == 2);
        CHECK(!k.du_val);
    }
    SUBCASE("IV for a6 = t^2, A2") {
        KodairaType k = type_of(a46("0", "t^2"));
        CHECK(k.kind == KodairaKind::IV);
        REQUIRE(k.du_val);
        CHECK(k.du_val->mu == 2);
        CHECK(k.euler_number == 4);
    }
    SUBCASE("I0* for a6 = t^3, D4") {
        KodairaType k = type_of(a46("0", "t^3"));
        CHECK(k.kind == KodairaKind::I0star);
        REQUIRE(k.du_val);
        CHECK(k.du_val->family == 'D');
        CHECK(k.du_val->mu == 4);
        CHECK(k.name() == "I0*");
    }
    SUBCASE("IV* and II* for a6 = t^4, t^5") {
        CHECK(type_of(a46("0", "t^4")).kind == KodairaKind::IVstar);
        CHECK(type_of(a46("0", "t^5")).kind == KodairaKind::IIstar);
    }
    SUBCASE("I1 for the nodal model") {
        KodairaType k = type_of(a46("-3", "2 + t"));
        CHECK(k.kind == KodairaKind::In);
        CHECK(k.n == 1);
        CHECK(!k.du_val);
    }
    SUBCASE("I3 multiplicative: a1 = 1, a6 = t^3 model") {
        // y^2 + xy = x^3 + a6 with ord disc = n and ord c4 = 0 is I_n.
        WeierstrassModel m = model("1", "0", "0", "0", "t^3");
        WeierstrassInvariants v = invariants(m);
        REQUIRE(ord0(v.c4) == 0);
        KodairaType k = type_of(m);
        CHECK(k.kind == KodairaKind::In);
        CHECK(k.n == ord0(v.disc));
        if (k.n >= 2) {
            REQUIRE(k.du_val);
            CHECK(k.du_val->mu == k.n - 1);
        }
    }
    SUBCASE("III for a4 = t") {
        KodairaType k = type_of(a46("t", "0"));
        CHECK(k.kind == KodairaKind::III);
        REQUIRE(k.du_val);
        CHECK(k.du_val->mu == 1);
    }
    SUBCASE("I1* via engineered cancellation: a4 = -3t^2, a6 = 2t^3 + t^4") {
        // 4 a4^3 + 27 a6^2 = 108 t^7 + 27 t^8, ord c4 = 2, ord c6 = 3.
        WeierstrassModel m = a46("-3t^2", "2t^3 + t^4");
        KodairaType k = type_of(m);
        CHECK(k.kind == KodairaKind::Instar);
        CHECK(k.n == 1);
        REQUIRE(k.du_val);
        CHECK(k.du_val->family == 'D');
        CHECK(k.du_val->mu == 5);
        CHECK(k.name() == "I1*");
        DeltaFCheck chk = delta_f_check(m);
        CHECK(chk.ord_delta == 7);
        CHECK(chk.consistent);  // 7 = 5 + 2
    }
    SUBCASE("non-minimal input is a precondition error") {
        CHECK_THROWS_AS(kodaira_type(a46("0", "t^12")), Error);
    }
}

TEST_CASE("delta_f identity across the suite") {
    // y^2 = x^3 + t^k: ord disc = 2k = mu_duval + 2.
    long expected_mu[] = {0, 2, 4, 6, 8};
    for (int k = 1; k <= 5; ++k) {
        WeierstrassModel m = a46("0", "t^" + std::to_string(k));
        DeltaFCheck chk = delta_f_check(m);
        CHECK(chk.ord_delta == 2 * k);
        CHECK(chk.mu_duval == expected_mu[k - 1]);
        CHECK(chk.chi_fiber_diff == 2);
        CHECK(chk.consistent);
    }
    DeltaFCheck nodal = delta_f_check(a46("-3", "2 + t"));
    CHECK(nodal.ord_delta == 1);
    CHECK(nodal.mu_duval == 0);
    CHECK(nodal.chi_fiber_diff == 1);
    CHECK(nodal.consistent);

    DeltaFCheck smooth = delta_f_check(a46("1", "0"));
    CHECK(smooth.ord_delta == 0);
    CHECK(smooth.chi_fiber_diff == 0);
    CHECK(smooth.consistent);
}

TEST_CASE("minimal models with non-constant j have ord disc < 12") {
    auto proportional = [](const MPoly& p, const MPoly& q) {
        if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
        auto [m0, c0] = *p.terms().begin();
        auto it = q.terms().find(m0);
        if (it == q.terms().end()) return false;
        return q == p.scaled(it->second / c0);
    };
    const char* sixes[] = {"t", "t^2", "t^3", "t^5", "t^7", "t^11"};
    for (const char* s : sixes) {
        auto [m, u] = minimalize(a46("t", s));
        (void)u;
        WeierstrassInvariants v = invariants(m);
        bool j_constant = v.c4.is_zero() || proportional(v.j_num, v.j_den);
        if (!j_constant) CHECK(ord0(v.disc) < 12);
    }
}
