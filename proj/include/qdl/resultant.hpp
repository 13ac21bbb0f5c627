#pragma once

#include <vector>

#include "qdl/poly.hpp"

namespace qdl {

// Exact determinant by cofactor expansion; intended for the small Sylvester
// blocks that appear in discriminant and elimination computations.
MPoly mpoly_det(std::vector<std::vector<MPoly>> m);

// Resultant with respect to `elim` of two polynomials; the result lives in
// the remaining variables.
MPoly resultant(const MPoly& p, const MPoly& q, Var elim);

}  // namespace qdl
