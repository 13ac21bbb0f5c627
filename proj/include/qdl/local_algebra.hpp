#pragma once

#include <optional>
#include <vector>

#include "qdl/poly.hpp"

namespace qdl {

// Colength-style counts that may be infinite (non-isolated singularities).
struct CountOrInf {
    bool finite = true;
    long value = 0;

    static CountOrInf infinite() { return {false, 0}; }
    static CountOrInf of(long v) { return {true, v}; }

    friend bool operator==(const CountOrInf&, const CountOrInf&) = default;
};

// Local standard basis with its monomial staircase (minimal generators of
// the leading-term ideal under LocalDegRevLex).
struct StandardBasis {
    std::vector<MPoly> generators;
    TermOrder order = TermOrder::LocalDegRevLex;
    std::vector<Monomial> leading_staircase;
};

struct MilnorData {
    CountOrInf mu;
    std::vector<Monomial> algebra_basis;  // monomials under the staircase, degree-increasing
    CountOrInf tjurina;
};

// Hard cap on intermediate total degrees during reductions; adversarial
// inputs error out instead of running away.
constexpr long kDegreeCap = 64;

// Mora weak normal form with ecart selection (minimal ecart, oldest first).
// Empty basis returns g unchanged.
MPoly mora_normal_form(const MPoly& g, const std::vector<MPoly>& basis, TermOrder order);

// Mora's tangent-cone variant of Buchberger's algorithm for local orders.
StandardBasis standard_basis(const std::vector<MPoly>& gens);

// mu(f) and the monomial basis of the Milnor algebra C{x,y}/(f_x, f_y).
MilnorData milnor_number(const MPoly& f);

// Colength of (f, f_x, f_y).
CountOrInf tjurina_number(const MPoly& f);

// Shared helper: monomials outside the staircase ideal, degree-increasing;
// empty optional when the quotient is infinite-dimensional.
std::optional<std::vector<Monomial>> monomials_under_staircase(
    const std::vector<Monomial>& staircase);

}  // namespace qdl
