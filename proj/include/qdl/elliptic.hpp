#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qdl/weierstrass.hpp"

namespace qdl {

using Complex = std::complex<double>;

// Period lattice of y^2 = 4x^3 - g2 x - g3 with tau in the fundamental
// domain and positively oriented area Im(conj(omega1) * omega2).
struct TorusData {
    Complex omega1{};
    Complex omega2{};
    Complex tau{};
    double area = 0.0;
    std::optional<std::string> warning;
};

// Optimal complex arithmetic-geometric mean (square roots chosen on the
// half-plane of the arithmetic mean).
Complex agm(Complex a, Complex b);

std::vector<Complex> depressed_cubic_roots(Complex p, Complex q);  // x^3 + p x + q

// Lattice generators via the AGM, self-validated by reassembling (g2, g3)
// from Eisenstein q-series and refined to a primitive basis.
TorusData periods_agm(Complex g2, Complex g3);

// q^{1/24} * prod (1 - q^n), q = exp(2 pi i tau); requires Im tau > 0.
Complex dedekind_eta(Complex tau);

// zeta'(0) of the flat-metric Laplacian on the torus of modulus tau scaled
// to total area `area`:
//   zeta'(0) = -log( Im(tau) * |eta(tau)|^4 * area ),    zeta(0) = -1.
// The absolute normalization is frozen against the heat-trace oracle in the
// test suite; only slopes and differences enter the theorem-level checks.
double zeta_prime_zero_flat_torus(Complex tau, double area);

struct QuillenSample {
    Complex t{};
    double log_l2 = 0.0;          // log ||1 x omega||_{L^2} = log area
    double zeta_prime_zero = 0.0;
    double log_quillen = 0.0;     // log_l2 + zeta_prime_zero / 2
    Complex tau{};
    std::optional<std::string> warning;
};

// Quillen log-norm of the trivializing section of lambda(O) over a smooth
// fiber: the invariant differential's lattice gives the L^2 part, the flat
// torus determinant the zeta part.
QuillenSample quillen_log_norm(const WeierstrassModel& m, Complex t, double tol = 1e-13);

// Samples log_quillen on circles |t| = r for each radius, `angles` points
// per circle. Reported tau values track continuity along each circle.
std::vector<QuillenSample> sample_quillen_circles(const WeierstrassModel& m,
                                                  const std::vector<double>& radii, int angles,
                                                  double tol = 1e-13);

}  // namespace qdl
