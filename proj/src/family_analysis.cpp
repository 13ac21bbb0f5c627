#include "qdl/family_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "qdl/cpoly.hpp"
#include "qdl/resultant.hpp"

namespace qdl {

namespace {

// zeta'(-1); zeta(-1) = -1/12.
constexpr double kZetaPrimeMinusOne = -0.16542114370045092918;

MPoly special_fiber(const MPoly& f) {
    return f.substituted(Var::t, MPoly::zero(VarSet::none()));
}

MPoly translate_to_origin(const MPoly& g, const GaussRational& px, const GaussRational& py) {
    VarSet ctx = VarSet::xy();
    MPoly xs = MPoly::variable(Var::x) + MPoly::constant(ctx, px);
    MPoly ys = MPoly::variable(Var::y) + MPoly::constant(ctx, py);
    return g.substituted(Var::x, xs).substituted(Var::y, ys);
}

}  // namespace

void verify_singular_points(const FamilyModel& fam) {
    MPoly f0 = special_fiber(fam.f);
    MPoly gx = f0.derivative(Var::x);
    MPoly gy = f0.derivative(Var::y);
    for (const auto& [px, py] : fam.singular_points) {
        std::vector<std::pair<Var, GaussRational>> at{{Var::x, px}, {Var::y, py}};
        if (!f0.evaluate(at).is_zero() || !gx.evaluate(at).is_zero() ||
            !gy.evaluate(at).is_zero())
            fail(ErrorKind::Domain,
                 "listed point (" + gauss_to_string(px) + ", " + gauss_to_string(py) +
                     ") is not a critical point of the special fiber");
    }
}

long total_milnor(const FamilyModel& fam) {
    verify_singular_points(fam);
    MPoly f0 = special_fiber(fam.f);
    long total = 0;
    for (const auto& [px, py] : fam.singular_points) {
        MPoly germ = translate_to_origin(f0, px, py);
        MilnorData md = milnor_number(germ);
        if (!md.mu.finite)
            fail(ErrorKind::Unsupported,
                 "non-isolated singularity at (" + gauss_to_string(px) + ", " +
                     gauss_to_string(py) +
                     "): the special fiber has a multiple (non-reduced) component, for which "
                     "no contribution rule is implemented");
        total += md.mu.value;
    }
    return total;
}

DegenerationReport delta_f(const FamilyModel& fam, long mu_x, std::optional<long> chi_difference) {
    DegenerationReport rep;
    long chi_diff = 0;
    if (!fam.singular_points.empty()) {
        rep.mu_total = total_milnor(fam);
        chi_diff = chi_difference.value_or(rep.mu_total);
    } else if (chi_difference) {
        // Smooth total space: the chi-difference equals the total Milnor number.
        chi_diff = *chi_difference;
        rep.mu_total = chi_diff;
    } else {
        fail(ErrorKind::Domain,
             "no singular points listed and no Euler-characteristic difference supplied");
    }
    rep.delta_f = mu_x + chi_diff;
    rep.predicted_slope = Rational(fam.rank_e * rep.delta_f, 12);
    return rep;
}

double deligne_rr_constant(long genus, long rank_e) {
    if (genus < 0) fail(ErrorKind::Domain, "genus must be non-negative");
    if (rank_e < 1) fail(ErrorKind::Domain, "rank must be positive");
    double ratio = kZetaPrimeMinusOne / (-1.0 / 12.0);
    return static_cast<double>(rank_e) * static_cast<double>(2 - 2 * genus) * (ratio + 0.5);
}

namespace {

// Best rational approximation with bounded denominator (continued fractions).
std::optional<Rational> rationalize(double v, long max_den = 1000000, double tol = 1e-8) {
    if (!std::isfinite(v)) return std::nullopt;
    double x = v;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 40; ++it) {
        double fl = std::floor(x);
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - v) <= tol * std::max(1.0, std::abs(v))) return Rational(p1, q1);
        double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

std::optional<GaussRational> rationalize_complex(std::complex<double> z) {
    auto re = rationalize(z.real());
    auto im = rationalize(z.imag());
    if (!re || !im) return std::nullopt;
    return GaussRational(*re, *im);
}

CPoly to_cpoly_in(const MPoly& p, Var v) {
    CPoly c(static_cast<std::size_t>(p.is_zero() ? 0 : p.degree_in(v) + 1), {0.0, 0.0});
    for (const auto& [m, coef] : p.terms()) c[m[v]] = coef.to_complex();
    return c;
}

}  // namespace

std::vector<std::pair<GaussRational, GaussRational>> find_singular_points(const MPoly& f) {
    MPoly f0 = special_fiber(f).embedded(VarSet::xy());
    if (f0.is_zero())
        fail(ErrorKind::Unsupported, "special fiber is identically zero");
    MPoly gx = f0.derivative(Var::x);
    MPoly gy = f0.derivative(Var::y);
    if (gx.is_zero() && gy.is_zero())
        fail(ErrorKind::Unsupported, "constant special fiber has no critical points");

    // Localize candidate x-values: either from a resultant (both partials
    // involve y) or directly from the univariate partial.
    std::vector<std::complex<double>> xs;
    auto depends_on_y = [](const MPoly& p) { return !p.is_zero() && p.degree_in(Var::y) > 0; };
    if (depends_on_y(gx) && depends_on_y(gy)) {
        MPoly res = resultant(gx, gy, Var::y);
        if (res.is_zero())
            fail(ErrorKind::Unsupported,
                 "partials share a component: singular locus is not a finite point set");
        xs = cpoly_roots(to_cpoly_in(res, Var::x));
        xs.push_back({0.0, 0.0});
    } else {
        const MPoly& uni = depends_on_y(gx) ? gy : gx;  // the x-only partial
        const MPoly& other = depends_on_y(gx) ? gx : gy;
        if (uni.is_zero()) {
            xs = {{0.0, 0.0}};
        } else if (uni.degree_in(Var::x) == 0) {
            return {};  // nonzero constant partial: no critical points
        } else {
            xs = cpoly_roots(to_cpoly_in(uni, Var::x));
        }
        (void)other;
    }

    std::vector<std::pair<GaussRational, GaussRational>> found;
    for (const auto& xhat : xs) {
        auto xr = rationalize_complex(xhat);
        if (!xr) fail(ErrorKind::Unsupported,
                      "candidate critical x-value does not round to a small rational; "
                      "supply the singular points explicitly");
        // y-candidates: roots of a partial specialized at x.
        MPoly gx_at = gx.substituted(Var::x, MPoly::constant(VarSet::none(), *xr));
        MPoly gy_at = gy.substituted(Var::x, MPoly::constant(VarSet::none(), *xr));
        std::vector<std::complex<double>> ys;
        const MPoly& pick = (!gy_at.is_zero() && gy_at.total_degree() > 0) ? gy_at : gx_at;
        if (!pick.is_zero() && pick.total_degree() > 0) {
            ys = cpoly_roots(to_cpoly_in(pick, Var::y));
        }
        ys.push_back({0.0, 0.0});
        for (const auto& yhat : ys) {
            auto yr = rationalize_complex(yhat);
            if (!yr) continue;
            std::vector<std::pair<Var, GaussRational>> at{{Var::x, *xr}, {Var::y, *yr}};
            if (f0.evaluate(at).is_zero() && gx.evaluate(at).is_zero() &&
                gy.evaluate(at).is_zero()) {
                std::pair<GaussRational, GaussRational> pt{*xr, *yr};
                if (std::find(found.begin(), found.end(), pt) == found.end())
                    found.push_back(pt);
            }
        }
    }
    return found;
}

}  // namespace qdl
