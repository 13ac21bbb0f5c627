#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qdl/local_algebra.hpp"
#include "qdl/poly.hpp"

namespace qdl {

// Affine local model of a one-parameter family: the total space is
// {f(x,y,t) = 0} over the t-disc (write f(x,y) - t for a fixed germ).
struct FamilyModel {
    MPoly f;
    std::vector<std::pair<GaussRational, GaussRational>> singular_points;  // on the t=0 fiber
    long rank_e = 1;
};

struct DegenerationReport {
    long mu_total = 0;
    std::optional<long> chi_special;
    std::optional<long> chi_generic;
    long delta_f = 0;
    Rational predicted_slope;  // rank_e * delta_f / 12
};

// Exact check that each listed point lies on the special fiber and is
// critical there: f = f_x = f_y = 0 at (p, t=0).
void verify_singular_points(const FamilyModel& fam);

// Sum of the local Milnor numbers of the translated germs at the listed
// points. Infinite local mu (non-isolated singular locus, e.g. a non-reduced
// component of the special fiber) is rejected: the discriminant bookkeeping
// implemented here has no contribution rule for such fibers.
long total_milnor(const FamilyModel& fam);

// delta_f = mu_X + (chi(X_0) - chi(X_t)). For a smooth total space pass
// mu_x = 0; the Euler-characteristic difference defaults to the total Milnor
// number (valid for reduced special fibers with isolated singularities) and
// may be overridden.
DegenerationReport delta_f(const FamilyModel& fam, long mu_x,
                           std::optional<long> chi_difference = std::nullopt);

// rank * (2 - 2 genus) * (zeta'(-1)/zeta(-1) + 1/2).
double deligne_rr_constant(long genus, long rank_e);

// Restricted elimination helper: finds the critical points of the special
// fiber when the system collapses to univariate root extraction with small
// rational roots (numeric localization followed by exact verification).
// Throws when it cannot certify the full solution set.
std::vector<std::pair<GaussRational, GaussRational>> find_singular_points(const MPoly& f);

}  // namespace qdl
