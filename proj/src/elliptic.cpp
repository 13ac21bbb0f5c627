#include "qdl/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "qdl/cpoly.hpp"

namespace qdl {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_finite(Complex z, const char* what) {
    if (!finite(z)) fail(ErrorKind::Accuracy, std::string("non-finite value in ") + what);
}

}  // namespace

Complex agm(Complex a, Complex b) {
    check_finite(a, "agm");
    check_finite(b, "agm");
    for (int it = 0; it < 200; ++it) {
        Complex am = 0.5 * (a + b);
        Complex gm = std::sqrt(a * b);
        // Good choice: keep the geometric mean on the arithmetic mean's side.
        if (std::real(gm * std::conj(am)) < 0.0) gm = -gm;
        a = am;
        b = gm;
        if (std::abs(a - b) <= 1e-16 * std::abs(a)) break;
    }
    return 0.5 * (a + b);
}

std::vector<Complex> depressed_cubic_roots(Complex p, Complex q) {
    // Cardano with complex radicals, then Newton polishing.
    std::vector<Complex> roots;
    Complex disc = q * q / 4.0 + p * p * p / 27.0;
    Complex s = std::sqrt(disc);
    // Take the larger branch; the other would cancel catastrophically.
    Complex u3 = (std::abs(-q / 2.0 + s) >= std::abs(-q / 2.0 - s)) ? -q / 2.0 + s
                                                                    : -q / 2.0 - s;
    Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
    for (int k = 0; k < 3; ++k) {
        Complex uk = u * std::pow(omega, k);
        Complex root = (std::abs(uk) < 1e-300) ? Complex(0.0, 0.0) : uk - p / (3.0 * uk);
        for (int it = 0; it < 6; ++it) {
            Complex f = root * root * root + p * root + q;
            Complex df = 3.0 * root * root + p;
            if (std::abs(df) < 1e-280) break;
            root -= f / df;
        }
        roots.push_back(root);
    }
    return roots;
}

namespace {

// Eisenstein reconstruction of (g2, g3) from a reduced basis; |q| is tiny in
// the fundamental domain so a short series suffices.
std::pair<Complex, Complex> g2g3_from_basis(Complex omega1, Complex tau) {
    Complex q = std::exp(Complex(0.0, 2.0 * M_PI) * tau);
    Complex e4(1.0, 0.0), e6(1.0, 0.0);
    Complex qn(1.0, 0.0);
    for (int n = 1; n <= 40; ++n) {
        qn *= q;
        if (std::abs(qn) < 1e-20) break;
        Complex common = qn / (1.0 - qn);
        double n3 = static_cast<double>(n) * n * n;
        e4 += 240.0 * n3 * common;
        e6 -= 504.0 * n3 * static_cast<double>(n) * n * common;
    }
    Complex factor = 2.0 * M_PI / omega1;
    Complex f2 = factor * factor;
    Complex f4 = f2 * f2;
    Complex f6 = f4 * f2;
    return {f4 * e4 / 12.0, f6 * e6 / 216.0};
}

struct Basis {
    Complex w1, w2;
};

// Unimodular reduction of tau = w2/w1 into the fundamental domain,
// transported to the generators.
Basis reduce_basis(Complex w1, Complex w2) {
    Complex tau = w2 / w1;
    if (tau.imag() < 0.0) {
        w2 = -w2;
        tau = -tau;
    }
    for (int it = 0; it < 64; ++it) {
        double n = std::round(tau.real());
        if (n != 0.0) {
            w2 -= n * w1;
            tau = w2 / w1;
        }
        if (std::abs(tau) < 1.0 - 1e-15) {
            Complex old = w1;
            w1 = w2;
            w2 = -old;
            tau = w2 / w1;
        } else {
            break;
        }
    }
    // Boundary normalization: Re tau = +1/2 and |tau| = 1 with Re tau >= 0.
    if (std::abs(tau.real() + 0.5) < 1e-12) {
        w2 += w1;
        tau = w2 / w1;
    }
    if (std::abs(std::abs(tau) - 1.0) < 1e-12 && tau.real() < -1e-12) {
        Complex old = w1;
        w1 = w2;
        w2 = -old;
    }
    return {w1, w2};
}

double basis_mismatch(Complex g2, Complex g3, const Basis& b) {
    Complex tau = b.w2 / b.w1;
    auto [h2, h3] = g2g3_from_basis(b.w1, tau);
    double scale = std::max({std::abs(g2), std::abs(g3), 1e-30});
    return (std::abs(h2 - g2) + std::abs(h3 - g3)) / scale;
}

}  // namespace

TorusData periods_agm(Complex g2, Complex g3) {
    check_finite(g2, "periods");
    check_finite(g3, "periods");
    Complex cubic_disc = g2 * g2 * g2 - 27.0 * g3 * g3;
    double scale = std::max(std::pow(std::abs(g2), 1.5), std::abs(g3)) + 1e-300;
    double rel = std::abs(cubic_disc) / (scale * scale);
    if (rel < 1e-13)
        fail(ErrorKind::Domain, "degenerate curve: discriminant vanishes within tolerance");

    // Roots of 4x^3 - g2 x - g3 = 4(x^3 + p x + q).
    auto roots = depressed_cubic_roots(-g2 / 4.0, -g3 / 4.0);
    const Complex e1 = roots[0], e2 = roots[1], e3 = roots[2];

    // One AGM period per distinguished root.
    auto period = [&](Complex ei, Complex ej, Complex ek) {
        Complex a = std::sqrt(ei - ej);
        Complex b = std::sqrt(ei - ek);
        if (std::real(b * std::conj(a)) < 0.0) b = -b;
        return Complex(M_PI, 0.0) / agm(a, b);
    };
    Complex p1 = period(e1, e2, e3);
    Complex p2 = period(e2, e3, e1);
    Complex p3 = period(e3, e1, e2);

    // Pick the best-validating pair, then refine index-2 sublattices until
    // the Eisenstein reconstruction agrees.
    std::vector<Basis> candidates;
    const Complex pairs[3][2] = {{p1, p2}, {p1, p3}, {p2, p3}};
    for (const auto& pr : pairs) {
        Complex w1 = pr[0], w2 = pr[1];
        if (!finite(w1) || !finite(w2)) continue;
        double denom = std::abs(w1) * std::abs(w2);
        if (denom < 1e-300) continue;
        if (std::abs(std::imag(w2 / w1)) < 1e-10) continue;  // collinear periods
        candidates.push_back({w1, w2});
    }
    if (candidates.empty())
        fail(ErrorKind::Accuracy, "period candidates collapsed; conditioning failure");

    Basis best = candidates.front();
    double best_err = 1e300;
    for (const auto& cand : candidates) {
        Basis red = reduce_basis(cand.w1, cand.w2);
        double err = basis_mismatch(g2, g3, red);
        if (err < best_err) {
            best_err = err;
            best = red;
        }
    }
    for (int round = 0; round < 8 && best_err > 1e-9; ++round) {
        Basis refined = best;
        double refined_err = best_err;
        const Basis halves[] = {{best.w1 / 2.0, best.w2},
                                {best.w1, best.w2 / 2.0},
                                {(best.w1 + best.w2) / 2.0, best.w2},
                                {best.w1, (best.w1 + best.w2) / 2.0}};
        for (const auto& h : halves) {
            if (std::abs(std::imag(h.w2 / h.w1)) < 1e-12) continue;
            Basis red = reduce_basis(h.w1, h.w2);
            double err = basis_mismatch(g2, g3, red);
            if (err < refined_err) {
                refined_err = err;
                refined = red;
            }
        }
        if (refined_err >= best_err) break;
        best = refined;
        best_err = refined_err;
    }
    if (best_err > 1e-8)
        fail(ErrorKind::Accuracy,
             "period lattice reconstruction failed (relative mismatch " +
                 std::to_string(best_err) + ")");

    TorusData td;
    td.omega1 = best.w1;
    td.omega2 = best.w2;
    td.tau = best.w2 / best.w1;
    td.area = std::imag(std::conj(td.omega1) * td.omega2);
    if (td.area < 0.0) {  // orientation: swap sign of omega2
        td.omega2 = -td.omega2;
        td.tau = -td.tau;
        td.area = -td.area;
    }
    if (rel < 1e-8)
        td.warning = "near-degenerate discriminant; period error up to ~" +
                     std::to_string(1e-14 / rel);
    return td;
}

Complex dedekind_eta(Complex tau) {
    if (!(tau.imag() > 0.0)) fail(ErrorKind::Domain, "eta requires Im tau > 0");
    Complex q = std::exp(Complex(0.0, 2.0 * M_PI) * tau);
    Complex prefactor = std::exp(Complex(0.0, M_PI / 12.0) * tau);
    Complex prod(1.0, 0.0);
    Complex qn(1.0, 0.0);
    for (int n = 1; n < 4000; ++n) {
        qn *= q;
        if (std::abs(qn) < 1e-17) break;
        prod *= (1.0 - qn);
    }
    return prefactor * prod;
}

double zeta_prime_zero_flat_torus(Complex tau, double area) {
    if (!(tau.imag() > 0.0)) fail(ErrorKind::Domain, "torus modulus requires Im tau > 0");
    if (!(area > 0.0)) fail(ErrorKind::Domain, "torus area must be positive");
    double eta4 = std::pow(std::abs(dedekind_eta(tau)), 4.0);
    return -std::log(tau.imag() * eta4 * area);
}

QuillenSample quillen_log_norm(const WeierstrassModel& m, Complex t, double tol) {
    WeierstrassInvariants inv = invariants(m);
    Complex c4 = inv.c4.is_zero() ? Complex(0, 0) : inv.c4.evaluate_complex(Var::t, t);
    Complex c6 = inv.c6.is_zero() ? Complex(0, 0) : inv.c6.evaluate_complex(Var::t, t);
    Complex disc = inv.disc.evaluate_complex(Var::t, t);

    // Smoothness of the fiber: |disc(t)| measured against the coefficient
    // scale with the forced vanishing order t^{ord disc} factored out, so
    // legitimately small |t| on families like disc ~ t^{2k} is not flagged.
    double scale = 0.0;
    for (const auto& [mono, c] : inv.disc.terms()) {
        (void)mono;
        scale = std::max(scale, std::abs(c.to_complex()));
    }
    long ord = ord0(inv.disc);
    scale *= std::pow(std::abs(t), static_cast<double>(ord)) *
             std::pow(std::max(1.0, std::abs(t)),
                      static_cast<double>(inv.disc.degree_in(Var::t) - ord));
    if (std::abs(disc) <= tol * std::max(scale, 1e-300))
        fail(ErrorKind::Domain, "singular fiber: discriminant vanishes at the sample point");

    // Short form Y^2 = 4X^3 - g2 X - g3 for the invariant differential.
    TorusData td = periods_agm(c4 / 12.0, c6 / 216.0);

    QuillenSample s;
    s.t = t;
    s.tau = td.tau;
    s.warning = td.warning;
    s.log_l2 = std::log(td.area);
    s.zeta_prime_zero = zeta_prime_zero_flat_torus(td.tau, td.area);
    s.log_quillen = s.log_l2 + 0.5 * s.zeta_prime_zero;
    if (!std::isfinite(s.log_quillen))
        fail(ErrorKind::Accuracy, "non-finite Quillen sample");
    return s;
}

std::vector<QuillenSample> sample_quillen_circles(const WeierstrassModel& m,
                                                  const std::vector<double>& radii, int angles,
                                                  double tol) {
    if (angles < 1) fail(ErrorKind::Domain, "need at least one angle per circle");
    std::vector<QuillenSample> out;
    for (double r : radii) {
        std::optional<Complex> prev_tau;
        for (int k = 0; k < angles; ++k) {
            double th = 2.0 * M_PI * k / angles;
            QuillenSample s = quillen_log_norm(m, std::polar(r, th), tol);
            if (prev_tau) {
                // Continuity of the reported modulus along the circle: among
                // neighbouring modular images pick the one closest to the
                // previous sample. The fitted quantities are invariant.
                Complex best = s.tau;
                double bestd = std::abs(s.tau - *prev_tau);
                const Complex images[] = {s.tau + 1.0, s.tau - 1.0, -1.0 / s.tau};
                for (Complex im : images) {
                    if (std::abs(im - *prev_tau) < bestd) {
                        bestd = std::abs(im - *prev_tau);
                        best = im;
                    }
                }
                s.tau = best;
            }
            prev_tau = s.tau;
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace qdl
