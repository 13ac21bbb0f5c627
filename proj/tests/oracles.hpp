#pragma once

// Test-only independent oracles. These deliberately avoid the library's own
// algorithm paths: colengths come from truncated linear algebra, periods
// from contour quadrature, zeta values from heat traces and Euler-Maclaurin
// sums.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qdl/poly.hpp"

namespace qdl::oracle {

// Colength of (g_1, ..., g_k) in C{x,y} by truncated Macaulay-style linear
// algebra: dim of monomials of degree < N modulo the span of all m * g_i
// truncated below degree N, stabilized over increasing N. Returns -1 when no
// stabilization is seen up to max_n (infinite colength at desk scale).
inline long truncated_colength(const std::vector<MPoly>& gens, int max_n = 24) {
    auto dim_at = [&](int N) -> long {
        // Basis: monomials of total degree < N.
        std::vector<Monomial> monos;
        for (int a = 0; a < N; ++a)
            for (int b = 0; a + b < N; ++b) monos.push_back(Monomial(a, b));
        auto index_of = [&](const Monomial& m) -> long {
            for (std::size_t i = 0; i < monos.size(); ++i)
                if (monos[i] == m) return static_cast<long>(i);
            return -1;
        };
        // Rows: m * g truncated below degree N.
        std::vector<std::vector<GaussRational>> rows;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            for (const auto& mult : monos) {
                MPoly prod = MPoly::term(VarSet::xy(), mult, GaussRational(1)) * g;
                std::vector<GaussRational> row(monos.size(), GaussRational(0));
                bool nonzero = false;
                for (const auto& [m, c] : prod.terms()) {
                    if (m.total_degree() >= N) continue;
                    row[static_cast<std::size_t>(index_of(m))] = c;
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        // Rank by exact Gaussian elimination over Q(i).
        std::size_t rank = 0;
        std::size_t cols = monos.size();
        for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
            std::size_t piv = rank;
            while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[rank], rows[piv]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col].is_zero()) continue;
                GaussRational f = rows[r][col] / rows[rank][col];
                for (std::size_t c = col; c < cols; ++c)
                    rows[r][c] -= f * rows[rank][c];
            }
            ++rank;
        }
        return static_cast<long>(monos.size() - rank);
    };
    long prev = -1;
    for (int N = 2; N <= max_n; ++N) {
        long d = dim_at(N);
        if (prev == d) return d;
        prev = d;
    }
    return -1;
}

// Period of dx/Y on Y^2 = 4(x-e1)(x-e2)(x-e3) as a spectral (parametric
// periodic trapezoid) contour integral around the pair (e_in, e_out), branch
// tracked continuously. The loop encloses exactly two roots, so 1/Y returns
// to itself after a full turn. Returns nullopt when no circle separates the
// pair from the third root.
inline std::optional<std::complex<double>> contour_period(std::complex<double> e_in,
                                                          std::complex<double> e_out,
                                                          std::complex<double> e_far,
                                                          int n = 8192) {
    using C = std::complex<double>;
    C center = 0.5 * (e_in + e_out);
    double need = 0.5 * std::abs(e_in - e_out);
    double far_d = std::abs(e_far - center);
    if (far_d < 1.3 * need) return std::nullopt;  // third root too close to separate
    double rad = std::sqrt(need * far_d);         // geometric compromise
    rad = std::max(rad, 1.1 * need);
    rad = std::min(rad, 0.9 * far_d);

    auto y_of = [&](C x) { return std::sqrt(4.0 * (x - e_in) * (x - e_out) * (x - e_far)); };
    C y_prev = y_of(center + rad);
    C acc = 0.0;
    for (int k = 0; k < n; ++k) {
        double th = 2.0 * M_PI * k / n;
        C z = center + std::polar(rad, th);
        C y = y_of(z);
        if (std::abs(y - y_prev) > std::abs(y + y_prev)) y = -y;
        acc += (1.0 / y) * C(0.0, 1.0) * std::polar(rad, th);
        y_prev = y;
    }
    return acc * (2.0 * M_PI / n);
}

// All feasible pair periods for the root triple.
inline std::vector<std::complex<double>> contour_periods(
    const std::vector<std::complex<double>>& e) {
    std::vector<std::complex<double>> out;
    const int idx[3][3] = {{0, 1, 2}, {1, 2, 0}, {0, 2, 1}};
    for (const auto& p : idx) {
        auto v = contour_period(e[p[0]], e[p[1]], e[p[2]]);
        if (v) out.push_back(*v);
    }
    return out;
}

// zeta'(-1) by term-wise differentiated Euler-Maclaurin summation.
inline double zeta_prime_minus1_em(int N = 40, int terms = 6) {
    const double bern[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
    double s = -1.0;
    double sum = 0.0, dsum = 0.0;
    for (int n = 1; n < N; ++n) {
        double ns = std::pow(n, -s);
        sum += ns;
        dsum += -std::log(n) * ns;
    }
    double Ns = std::pow(N, -s), lnN = std::log(N);
    sum += std::pow(N, 1 - s) / (s - 1) + 0.5 * Ns;
    dsum += -lnN * std::pow(N, 1 - s) / (s - 1) - std::pow(N, 1 - s) / ((s - 1) * (s - 1)) -
            0.5 * lnN * Ns;
    // Correction terms B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1}.
    double fact = 1.0;
    for (int j = 1; j <= terms; ++j) {
        fact *= (2.0 * j) * (2.0 * j - 1.0);
        int m = 2 * j - 1;
        double poch = 1.0, dpoch = 0.0;  // product (s+i), i=0..m-1 and derivative
        for (int i = 0; i < m; ++i) {
            double partial = 1.0;
            for (int l = 0; l < m; ++l)
                if (l != i) partial *= (s + l);
            dpoch += partial;
            poch *= (s + i);
        }
        double npow = std::pow(N, -s - 2 * j + 1);
        sum += bern[j - 1] / fact * poch * npow;
        dsum += bern[j - 1] / fact * (dpoch * npow - poch * lnN * npow);
    }
    (void)sum;
    return dsum;
}

// zeta(s) and zeta'(0) of the flat-torus Laplacian by Mellin-regularized
// heat-trace summation. The full trace (including the zero mode) satisfies
//   Theta(u) = sum exp(-mu_{m,n} u),  mu_{m,n} = 4 pi^2 |m tau + n|^2 / (A y),
// and the small-u side is controlled by the Jacobi transformation
//   Theta_all(u) = A/(4 pi u) * sum exp(-A |m tau + n|^2 / (4 u y)).
struct TorusHeatOracle {
    std::complex<double> tau;
    double area;

    double theta_all_large(double u) const {  // direct eigenvalue sum, u not too small
        double y = tau.imag();
        double acc = 0.0;
        int M = 40;
        for (int m = -M; m <= M; ++m)
            for (int n = -M; n <= M; ++n) {
                double q = std::norm(double(m) * tau + double(n));
                acc += std::exp(-4.0 * M_PI * M_PI * q * u / (area * y));
            }
        return acc;
    }
    double theta_all_small(double u) const {  // Jacobi-transformed side
        double y = tau.imag();
        double acc = 0.0;
        int M = 40;
        for (int m = -M; m <= M; ++m)
            for (int n = -M; n <= M; ++n) {
                double q = std::norm(double(m) * tau + double(n));
                acc += std::exp(-area * q / (4.0 * u * y));
            }
        return area / (4.0 * M_PI * u) * acc;
    }
    double theta_all(double u) const { return u >= 0.5 ? theta_all_large(u) : theta_all_small(u); }

    // Gamma(s) zeta(s) = I1 + I2 + A/(4 pi (s-1)) - 1/s with
    // I1 = int_1^inf u^{s-1} (Theta - 1),  I2 = int_0^1 u^{s-1} (Theta - A/(4 pi u)).
    double integrals(double s, double* i1_out, double* i2_out) const {
        auto simpson = [](auto&& f, double a, double b, int n) {
            double h = (b - a) / n, acc = f(a) + f(b);
            for (int k = 1; k < n; ++k) acc += f(a + k * h) * ((k % 2) ? 4.0 : 2.0);
            return acc * h / 3.0;
        };
        double i1 = simpson([&](double u) { return std::pow(u, s - 1) * (theta_all(u) - 1.0); },
                            1.0, 30.0, 600);
        double i2 = simpson(
            [&](double u) {
                return std::pow(u, s - 1) * (theta_all(u) - area / (4.0 * M_PI * u));
            },
            1e-4, 1.0, 2000);
        if (i1_out) *i1_out = i1;
        if (i2_out) *i2_out = i2;
        return i1 + i2;
    }

    double zeta(double s) const {
        double i12 = integrals(s, nullptr, nullptr);
        double f = i12 + area / (4.0 * M_PI * (s - 1.0)) - 1.0 / s;
        return f / std::tgamma(s);
    }

    // zeta'(0) = I1(0) + I2(0) - A/(4 pi) - gamma_E
    double zeta_prime_zero() const {
        double i1 = 0.0, i2 = 0.0;
        integrals(0.0, &i1, &i2);
        const double euler_gamma = 0.57721566490153286;
        return i1 + i2 - area / (4.0 * M_PI) - euler_gamma;
    }
};

}  // namespace qdl::oracle
