#include "qdl/cpoly.hpp"

#include <algorithm>
#include <cmath>

#include "qdl/error.hpp"

namespace qdl {

std::complex<double> cpoly_eval(const CPoly& p, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
    return acc;
}

void cpoly_trim(CPoly& p, double rel_eps) {
    double scale = 0.0;
    for (const auto& c : p) scale = std::max(scale, std::abs(c));
    while (!p.empty() && std::abs(p.back()) <= rel_eps * scale) p.pop_back();
}

std::vector<std::complex<double>> cpoly_roots(CPoly p) {
    cpoly_trim(p);
    if (p.size() <= 1) return {};
    const std::size_t n = p.size() - 1;

    // Normalize to a monic polynomial.
    for (auto& c : p) c /= p.back();

    if (n == 1) return {-p[0]};
    if (n == 2) {
        std::complex<double> b = p[1], c = p[0];
        std::complex<double> d = std::sqrt(b * b - 4.0 * c);
        // Stable pairing: pick the larger-magnitude numerator first.
        std::complex<double> q = (std::real(std::conj(b) * d) >= 0.0) ? -(b + d) / 2.0
                                                                      : -(b - d) / 2.0;
        if (std::abs(q) < 1e-300) return {std::complex<double>(0, 0), -b};
        return {q, c / q};
    }

    // Durand-Kerner from a slightly irrational spiral start.
    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(p[k]));
    radius = 1.0 + radius;
    std::vector<std::complex<double>> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * (static_cast<double>(k) / n) + 0.4;
        z[k] = radius * std::polar(1.0, ang) * (0.4 + 0.9 * (k + 1.0) / n);
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            std::complex<double> num = cpoly_eval(p, z[k]);
            std::complex<double> den{1.0, 0.0};
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) den *= (z[k] - z[j]);
            if (std::abs(den) < 1e-300) den = 1e-300;
            std::complex<double> step = num / den;
            z[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14 * radius) break;
    }
    // Newton polish to squeeze out the last digits.
    CPoly dp(n);
    for (std::size_t k = 1; k <= n; ++k) dp[k - 1] = p[k] * static_cast<double>(k);
    for (auto& root : z) {
        for (int it = 0; it < 4; ++it) {
            std::complex<double> d = cpoly_eval(dp, root);
            if (std::abs(d) < 1e-280) break;
            root -= cpoly_eval(p, root) / d;
        }
    }
    return z;
}

}  // namespace qdl
