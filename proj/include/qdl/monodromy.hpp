#pragma once

#include <vector>

#include "qdl/local_algebra.hpp"
#include "qdl/poly.hpp"

namespace qdl {

// Multiset of spectral numbers sigma in (0, 2), |values| = mu, symmetric
// about 1.
struct Spectrum {
    std::vector<Rational> values;  // sorted ascending, multiplicities kept
};

struct MonodromyData {
    std::vector<Rational> eigenvalue_args;    // sigma mod 1 in [0,1), sorted multiset
    std::vector<Int> char_poly;               // ascending integer coefficients in lambda
    std::vector<Rational> barlet_exponents;   // set of r in (0,2) with exp(pi i r) an eigenvalue
    long unit_eigenvalue_count = 0;           // eigenvalue 1 occurrences (r = 0/2, kept apart)
};

// Spectral numbers of a quasi-homogeneous isolated germ from the weighted
// degrees of the Milnor algebra basis: sigma = (alpha+1) w1 + (beta+1) w2.
Spectrum spectrum_quasihomogeneous(const MPoly& f);

// Eigenvalue arguments, exact characteristic polynomial (product of
// cyclotomic polynomials), and the exponent set r with eigenvalues
// exp(pi i r), r in (0,2).
MonodromyData monodromy_eigenvalues(const MPoly& f);

// n-th cyclotomic polynomial, ascending integer coefficients.
std::vector<Int> cyclotomic_polynomial(unsigned long n);

}  // namespace qdl
