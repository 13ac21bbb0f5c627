#pragma once

#include <optional>
#include <string>

#include "qdl/poly.hpp"

namespace qdl {

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 with polynomial
// coefficients over the disc coordinate t. Construction rejects models with
// identically vanishing discriminant.
struct WeierstrassModel {
    MPoly a1, a2, a3, a4, a6;

    static WeierstrassModel make(MPoly a1, MPoly a2, MPoly a3, MPoly a4, MPoly a6);
};

struct WeierstrassInvariants {
    MPoly b2, b4, b6, b8;
    MPoly c4, c6;
    MPoly disc;
    MPoly j_num, j_den;  // j = c4^3 / disc
};

enum class KodairaKind { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct DuVal {
    char family = 'A';  // 'A', 'D' or 'E'
    int index = 0;
    int mu = 0;  // A_n, D_n, E_n all have Milnor number n
};

struct KodairaType {
    KodairaKind kind = KodairaKind::I0;
    int n = 0;  // index for In / In*
    long euler_number = 0;  // = ord0(disc) of the minimal model
    std::optional<DuVal> du_val;  // absent for smooth total space (I0, I1, II)
    std::string name() const;
};

struct DeltaFCheck {
    long ord_delta = 0;
    long mu_duval = 0;
    long chi_fiber_diff = 0;  // 0 smooth, 1 multiplicative, 2 additive
    bool consistent = false;  // ord_delta == mu_duval + chi_fiber_diff
};

WeierstrassInvariants invariants(const WeierstrassModel& m);

// Vanishing order at t = 0; the zero polynomial errors out.
long ord0(const MPoly& p);

// Rescales (x,y) -> (u^2 x, u^3 y) with u = t^m while ord c4 >= 4,
// ord c6 >= 6, ord disc >= 12 and the coefficient divisions stay polynomial.
// Returns the reduced model and the accumulated u-order.
std::pair<WeierstrassModel, long> minimalize(const WeierstrassModel& m);

bool is_minimal(const WeierstrassModel& m);

// Residue-characteristic-zero reduction-type table from
// (ord c4, ord c6, ord disc); requires a minimal model.
KodairaType kodaira_type(const WeierstrassModel& m);

// ord0(disc) against du Val mu + fiber Euler-characteristic difference.
DeltaFCheck delta_f_check(const WeierstrassModel& m);

}  // namespace qdl
