#pragma once

#include <vector>

#include "qdl/local_algebra.hpp"
#include "qdl/poly.hpp"

namespace qdl {

struct LatticePoint {
    long a = 0;  // exponent of x
    long b = 0;  // exponent of y
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct PolygonEdge {
    LatticePoint from;  // smaller x-exponent endpoint
    LatticePoint to;
    long dir_a = 0;  // primitive direction (dir_a > 0, dir_b < 0)
    long dir_b = 0;
    long lattice_length = 1;  // gcd of the coordinate differences
};

struct NewtonPolygon {
    std::vector<LatticePoint> support;
    std::vector<LatticePoint> vertices;       // lower-left hull, x-exponent increasing
    std::vector<PolygonEdge> compact_edges;   // ordered by decreasing slope
    bool convenient = false;                  // touches both axes
    long x_intercept = -1;                    // valid when convenient
    long y_intercept = -1;
    bool x_divides = false;                   // x | f  (min x-exponent >= 1)
    bool y_divides = false;
};

struct BranchData {
    long branch_count = 0;
    long delta = 0;
};

NewtonPolygon newton_polygon(const MPoly& f);

// Two-variable Newton number 2S - a - b + 1 (exact lattice area under the
// polygon). Requires a convenient polygon.
long newton_number(const NewtonPolygon& p);

// Every compact-edge polynomial, dehomogenized along the edge, must be
// squarefree (no repeated nonzero roots). Vertices never obstruct.
bool is_nondegenerate(const MPoly& f);

// Branch count r and delta invariant, valid for nondegenerate germs with
// finite Milnor number. Branches along the axes (x | f, y | f) count one
// each on top of the compact-edge lattice lengths; delta is defined through
// mu = 2*delta - r + 1.
BranchData branch_count_and_delta(const MPoly& f);

}  // namespace qdl
