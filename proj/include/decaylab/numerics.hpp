#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace decaylab::numerics {

using RealFn = std::function<double(double)>;

struct QuadratureConfig {
    double abs_tol = 1e-9;
    double rel_tol = 1e-8;
    int max_panels = 200000;
    int oscillation_points_per_period = 8;

    void validate() const;
};

/// Thrown when an integral fails to converge within the panel budget.
/// Carries the best estimate so callers can decide whether to proceed.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

struct IntegralResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
    int panels = 0;

    double require(const char* context) const;
};

struct ComplexIntegralResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    bool converged = false;
    int panels = 0;

    std::complex<double> require(const char* context) const;
};

// Adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b].
IntegralResult integrate_adaptive(const RealFn& f, double a, double b,
                                  const QuadratureConfig& cfg = {});

// Cauchy principal value of \int_a^b f(x) dx where f carries a simple pole
// at `pole` strictly inside (a, b). The symmetric window around the pole is
// integrated as f(p+u) + f(p-u), which cancels the 1/(x-p) term analytically.
IntegralResult integrate_principal_value(const RealFn& f, double pole,
                                         double a, double b,
                                         const QuadratureConfig& cfg = {});

// \int_{e_min}^{e_max} g(E) e^{-iEt} dE for t >= 0. Panel widths are capped
// at (2*pi/t)/oscillation_points_per_period; t == 0 falls back to
// integrate_adaptive.
ComplexIntegralResult integrate_oscillatory(const RealFn& g, double e_min,
                                            double e_max, double t,
                                            const QuadratureConfig& cfg = {});

// Bisection on [lo, hi]; requires f(lo)*f(hi) < 0. Brackets the root to a
// width <= tol and returns the midpoint.
double find_root_bisect(const RealFn& f, double lo, double hi, double tol);

struct Derivative {
    double value = 0.0;
    double error = 0.0;
};

// Central difference with one Richardson step (step and step/2).
Derivative differentiate_central(const RealFn& f, double x, double step);

// Estimate of \int_W^inf E^n rho(E) dE assuming rho(E) ~ rho(W) (E/W)^p for
// E >= W with p + n < -1. Used to close improper integrals over power-law
// tails.
double power_law_tail(double rho_at_boundary, double boundary, double exponent,
                      int moment_order = 0);

}  // namespace decaylab::numerics
