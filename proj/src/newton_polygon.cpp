#include "qdl/newton_polygon.hpp"

#include <algorithm>
#include <numeric>

namespace qdl {

namespace {

long cross(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q) {
    return (p.a - o.a) * (q.b - o.b) - (p.b - o.b) * (q.a - o.a);
}

void check_polygon_input(const MPoly& f) {
    if (f.is_zero()) fail(ErrorKind::Domain, "newton polygon of the zero polynomial");
    if (!f.vars().subset_of(VarSet::xy()))
        fail(ErrorKind::Domain, "newton polygon expects a polynomial in x, y");
    if (!f.constant_term().is_zero())
        fail(ErrorKind::Domain, "newton polygon of a germ requires f(0,0) = 0");
}

// Univariate polynomial over Q(i), ascending coefficients; just enough for
// squarefreeness via gcd with the derivative.
using UniPoly = std::vector<GaussRational>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * GaussRational(Rational(static_cast<long>(k))));
    uni_trim(d);
    return d;
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        GaussRational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
        uni_trim(a);
    }
    return a;
}

bool uni_gcd_is_constant(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() <= 1;
}

}  // namespace

NewtonPolygon newton_polygon(const MPoly& f) {
    check_polygon_input(f);

    NewtonPolygon poly;
    for (const auto& [m, c] : f.terms())
        poly.support.push_back({static_cast<long>(m[Var::x]), static_cast<long>(m[Var::y])});
    std::sort(poly.support.begin(), poly.support.end(),
              [](const LatticePoint& p, const LatticePoint& q) {
                  return p.a != q.a ? p.a < q.a : p.b < q.b;
              });

    long min_a = poly.support.front().a;
    long min_b = poly.support.front().b;
    for (const auto& p : poly.support) min_b = std::min(min_b, p.b);
    poly.x_divides = min_a >= 1;
    poly.y_divides = min_b >= 1;

    // Lower-left hull from the minimal-x endpoint to the minimal-y endpoint.
    // Per x-exponent only the smallest y-exponent can lie on the hull.
    std::vector<LatticePoint> pts;
    for (const auto& p : poly.support) {
        if (!pts.empty() && pts.back().a == p.a) continue;  // support sorted (a asc, b asc)
        pts.push_back(p);
    }
    // Truncate after the first point achieving the global minimal b.
    std::vector<LatticePoint> chain;
    for (const auto& p : pts) {
        chain.push_back(p);
        if (p.b == min_b) break;
    }
    // Walking toward smaller b, hull vertices make strict left turns
    // (cross > 0); right turns and collinear interior points pop.
    std::vector<LatticePoint> hull;
    for (const auto& p : chain) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    poly.vertices = hull;

    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        PolygonEdge e;
        e.from = hull[k];
        e.to = hull[k + 1];
        long da = e.to.a - e.from.a;
        long db = e.to.b - e.from.b;  // da > 0, db < 0 along the lower-left hull
        long g = std::gcd(da, -db);
        e.lattice_length = g;
        e.dir_a = da / g;
        e.dir_b = db / g;
        poly.compact_edges.push_back(e);
    }

    const LatticePoint& start = poly.vertices.front();
    const LatticePoint& end = poly.vertices.back();
    poly.convenient = (start.a == 0) && (end.b == 0);
    if (start.a == 0) poly.y_intercept = start.b;
    if (end.b == 0) poly.x_intercept = end.a;
    return poly;
}

long newton_number(const NewtonPolygon& p) {
    if (!p.convenient)
        fail(ErrorKind::Domain,
             "newton number requires a convenient polygon (support touching both axes)");
    // Doubled lattice area of the region bounded by the polygon and the axes,
    // by the shoelace formula on (0,0) -> (0,b) -> vertices -> (a,0) -> (0,0).
    std::vector<LatticePoint> loop;
    loop.push_back({0, 0});
    for (const auto& v : p.vertices) loop.push_back(v);
    loop.push_back({0, 0});
    long doubled = 0;
    for (std::size_t k = 0; k + 1 < loop.size(); ++k)
        doubled += loop[k].a * loop[k + 1].b - loop[k + 1].a * loop[k].b;
    doubled = doubled < 0 ? -doubled : doubled;
    return doubled - p.x_intercept - p.y_intercept + 1;
}

bool is_nondegenerate(const MPoly& f) {
    check_polygon_input(f);
    NewtonPolygon poly = newton_polygon(f);
    for (const auto& edge : poly.compact_edges) {
        // Collect support coefficients along the edge at lattice positions
        // from + j * (dir_a, dir_b), j = 0..lattice_length.
        UniPoly p(static_cast<std::size_t>(edge.lattice_length) + 1, GaussRational(0));
        for (const auto& [m, c] : f.terms()) {
            long a = static_cast<long>(m[Var::x]) - edge.from.a;
            long b = static_cast<long>(m[Var::y]) - edge.from.b;
            if (a < 0 || edge.dir_a == 0) continue;
            if (a % edge.dir_a != 0) continue;
            long j = a / edge.dir_a;
            if (j < 0 || j > edge.lattice_length) continue;
            if (b != j * edge.dir_b) continue;
            p[static_cast<std::size_t>(j)] = c;
        }
        // Endpoints are hull vertices, so p(0) != 0 and deg p = length: all
        // roots are nonzero and squarefreeness reduces to gcd(p, p') = const.
        if (!uni_gcd_is_constant(p, uni_derivative(p))) return false;
    }
    return true;
}

BranchData branch_count_and_delta(const MPoly& f) {
    if (!is_nondegenerate(f))
        fail(ErrorKind::Unsupported,
             "degenerate newton boundary: branch count is not read off the polygon; "
             "supply the branch count manually");
    MilnorData md = milnor_number(f);
    if (!md.mu.finite)
        fail(ErrorKind::Unsupported, "branch data requires a finite Milnor number");

    NewtonPolygon poly = newton_polygon(f);
    long r = 0;
    if (poly.x_divides) r += 1;
    if (poly.y_divides) r += 1;
    for (const auto& e : poly.compact_edges) r += e.lattice_length;

    long numerator = md.mu.value + r - 1;
    if (numerator < 0 || numerator % 2 != 0)
        fail(ErrorKind::Internal, "mu + r - 1 must be a non-negative even integer");
    return BranchData{r, numerator / 2};
}

}  // namespace qdl
