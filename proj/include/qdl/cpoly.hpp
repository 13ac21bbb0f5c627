#pragma once

#include <complex>
#include <vector>

namespace qdl {

// Numeric univariate polynomials with complex coefficients, ascending order.
// Small degrees only; used for branch points, period roots and candidate
// localization ahead of exact verification.
using CPoly = std::vector<std::complex<double>>;

std::complex<double> cpoly_eval(const CPoly& p, std::complex<double> z);

// Strips (numerically) zero leading coefficients relative to the largest one.
void cpoly_trim(CPoly& p, double rel_eps = 1e-14);

// All complex roots via Durand-Kerner with Newton polishing. The polynomial
// must have nonzero leading coefficient after trimming; degree 0 yields {}.
std::vector<std::complex<double>> cpoly_roots(CPoly p);

}  // namespace qdl
