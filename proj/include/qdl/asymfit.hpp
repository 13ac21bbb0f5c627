#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdl/poly.hpp"

namespace qdl {

using Complex = std::complex<double>;

// Circle-sampled scalar data F(t) with its sampling pattern.
struct Samples {
    struct Point {
        Complex t;
        double value;
    };
    std::vector<Point> points;
    std::vector<double> radii;  // strictly decreasing
    int angles_per_circle = 1;
    std::string pattern = "circles";
    std::vector<std::string> notes;

    static Samples from_points(std::vector<Point> pts, std::string pattern = "circles");
};

enum class SlopeModel { SlopeConst, SlopeConstLogLog };

struct BasisTerm {
    enum class Kind { Constant, LogAbsT, LogLogInvT, Power };
    Kind kind = Kind::Constant;
    Rational exponent;  // for Power
    int log_power = 0;  // h for Power terms
    std::optional<bool> in_predicted_set;  // membership report for Power terms
    std::string label() const;
};

struct FitResult {
    std::vector<BasisTerm> terms;
    std::vector<double> coefficients;  // sub-noise entries reported as zero
    double residual_rms = 0.0;         // on the held-out smallest circle
    double condition_estimate = 1.0;   // of the normal system

    double coefficient_for(BasisTerm::Kind kind) const;  // first matching term
};

struct ScanResult {
    double exponent = 0.0;
    double error_bar = 0.0;
    bool log_correction = false;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    double used_radius = 0.0;  // may differ from the request by <= 1% (collision)
    std::vector<std::string> notes;
};

// Area of {f(x,y) = t} over the x-disc of the given radius with the
// Euclidean area form of C^2, summed over y-branches. f must be monic in y
// up to a constant. Branch points are resolved by graded adaptive polar
// quadrature; a branch point within 1% of the contour shifts the radius.
class FiberIntegrator {
public:
    explicit FiberIntegrator(const MPoly& f);

    IntegralResult integrate(Complex t, double radius, double tol = 1e-5) const;

    long y_degree() const { return ydeg_; }

private:
    struct Eval;
    double integrand(Complex x, Complex t) const;
    std::vector<Complex> branch_points(Complex t) const;

    MPoly f_;
    long ydeg_ = 0;
    MPoly disc_xt_;  // Res_y(f - t, f_y), exact in (x, t)
    // coefficient arrays for fast numeric evaluation
    std::vector<std::vector<Complex>> fc_, fxc_, fyc_;  // [y-power][x-power]
    double weighted_order_ = 1.0;  // max(1/w1, 1/w2) or total degree fallback
};

IntegralResult integrate_milnor_fiber(const MPoly& f, Complex t, double radius,
                                      double tol = 1e-5);

// Least squares for F = c0 + c1 log|t| (+ c2 loglog(1/|t|)); per-circle
// angle averages feed the fit, the smallest circle is held out for the
// residual. Needs >= 4 circles.
FitResult fit_log_slope(const Samples& s, SlopeModel model);

// Least squares over {1} and {|t|^e (log|t|)^h : e in candidates, h <= max_h}.
// The basis is truncated to the 12 largest terms at the outer radius;
// exponents closer than 1e-3 collide. When `predicted` is given, each power
// term is tagged with its membership in {r + m + m' : r in predicted} u N.
FitResult fit_exponents(const Samples& s, const std::vector<Rational>& candidates, int max_h,
                        const std::vector<Rational>* predicted = nullptr);

// Model-free leading-exponent estimate from successive circle differences,
// with a bootstrap error bar and a logarithmic-correction flag. Needs >= 6
// circles spanning a radius factor >= 8.
ScanResult exponent_scan(const Samples& s, std::uint64_t seed = 0);

// Angular Fourier coefficient magnitudes |c_k| per circle (optional mode for
// exposing t^m conj(t)^m' structure with m != m').
std::vector<std::vector<double>> angular_fourier(const Samples& s, int max_k);

}  // namespace qdl
