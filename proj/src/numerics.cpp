#include "decaylab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace decaylab::numerics {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <typename T>
struct Panel {
    double a = 0.0;
    double b = 0.0;
    T value{};
    double error = 0.0;
};

// One G7/K15 evaluation over [a, b]. The error estimate follows QUADPACK's
// qk15 scaling of |K15 - G7| against the deviation integral resasc.
template <typename T, typename Fn>
Panel<T> gk15(const Fn& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    T fv[15];
    const T fc = f(center);
    fv[7] = fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        fv[i] = f(center - dx);
        fv[14 - i] = f(center + dx);
    }

    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int i = 0; i < 7; ++i) {
        const T pair = fv[i] + fv[14 - i];
        resk += kWgk[i] * pair;
        resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
        if (i % 2 == 1) resg += kWg[i / 2] * pair;
    }

    const T mean = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int i = 0; i < 7; ++i) {
        resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
    }

    Panel<T> p;
    p.a = a;
    p.b = b;
    p.value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);

    double err = std::abs(resk - resg) * std::abs(half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) {
        err = std::max(err, 50.0 * eps * resabs);
    }
    p.error = err;
    return p;
}

template <typename T>
struct AdaptiveOutcome {
    T value{};
    double error = 0.0;
    bool converged = false;
    int panels = 0;
};

// Refine the panel with the largest error until the summed error satisfies
// max(abs_tol, rel_tol*|result|) or the panel budget runs out. Panels that
// reach double-precision width are frozen; their error stays in the total.
template <typename T, typename Fn>
AdaptiveOutcome<T> refine(const Fn& f, std::vector<Panel<T>>& panels,
                          const QuadratureConfig& cfg) {
    auto by_error = [](const Panel<T>& x, const Panel<T>& y) {
        return x.error < y.error;
    };
    std::make_heap(panels.begin(), panels.end(), by_error);

    T frozen_value{};
    double frozen_err = 0.0;

    T total{};
    double total_err = 0.0;
    auto recompute_totals = [&] {
        total = frozen_value;
        total_err = frozen_err;
        for (const auto& p : panels) {
            total += p.value;
            total_err += p.error;
        }
    };
    recompute_totals();

    int created = static_cast<int>(panels.size());
    long stale = 0;  // refinements since the running sums were rebuilt
    while (true) {
        const double target =
            std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (total_err <= target || panels.empty()) {
            recompute_totals();
            if (panels.empty() ||
                total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
                const bool ok =
                    total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
                return {total, total_err, ok, created};
            }
        }
        if (created + 1 > cfg.max_panels) {
            recompute_totals();
            return {total, total_err, false, created};
        }

        std::pop_heap(panels.begin(), panels.end(), by_error);
        Panel<T> worst = panels.back();
        panels.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            frozen_value += worst.value;
            frozen_err += worst.error;
            continue;
        }
        Panel<T> left = gk15<T>(f, worst.a, mid);
        Panel<T> right = gk15<T>(f, mid, worst.b);
        created += 1;

        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push_back(left);
        std::push_heap(panels.begin(), panels.end(), by_error);
        panels.push_back(right);
        std::push_heap(panels.begin(), panels.end(), by_error);

        if (++stale >= 512) {  // sweep accumulated cancellation out of the sums
            recompute_totals();
            stale = 0;
        }
    }
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("QuadratureConfig: tolerances must be > 0");
    if (max_panels < 1)
        throw std::invalid_argument("QuadratureConfig: max_panels must be >= 1");
    if (oscillation_points_per_period < 4)
        throw std::invalid_argument(
            "QuadratureConfig: oscillation_points_per_period must be >= 4");
}

double IntegralResult::require(const char* context) const {
    if (!converged) {
        throw QuadratureError(std::string(context) +
                                  ": quadrature did not converge (error " +
                                  std::to_string(error) + ")",
                              value, error);
    }
    return value;
}

std::complex<double> ComplexIntegralResult::require(const char* context) const {
    if (!converged) {
        throw QuadratureError(std::string(context) +
                                  ": quadrature did not converge (error " +
                                  std::to_string(error) + ")",
                              std::abs(value), error);
    }
    return value;
}

IntegralResult integrate_adaptive(const RealFn& f, double a, double b,
                                  const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_adaptive: requires a < b");

    std::vector<Panel<double>> panels;
    panels.push_back(gk15<double>(f, a, b));
    auto out = refine<double>(f, panels, cfg);
    return {out.value, out.error, out.converged, out.panels};
}

IntegralResult integrate_principal_value(const RealFn& f, double pole,
                                         double a, double b,
                                         const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < pole && pole < b))
        throw std::invalid_argument(
            "integrate_principal_value: pole must lie strictly inside (a, b)");

    const double w = std::min(pole - a, b - pole);
    // f(p+u) + f(p-u): the odd 1/(x-pole) part cancels exactly, leaving a
    // function with a removable point at u = 0 (never sampled by GK nodes).
    auto symmetric = [&](double u) { return f(pole + u) + f(pole - u); };

    IntegralResult sym = integrate_adaptive(symmetric, 0.0, w, cfg);
    double value = sym.value;
    double error = sym.error;
    bool converged = sym.converged;
    int panels = sym.panels;

    if (pole - w > a) {
        IntegralResult left = integrate_adaptive(f, a, pole - w, cfg);
        value += left.value;
        error += left.error;
        converged = converged && left.converged;
        panels += left.panels;
    }
    if (pole + w < b) {
        IntegralResult right = integrate_adaptive(f, pole + w, b, cfg);
        value += right.value;
        error += right.error;
        converged = converged && right.converged;
        panels += right.panels;
    }
    return {value, error, converged, panels};
}

ComplexIntegralResult integrate_oscillatory(const RealFn& g, double e_min,
                                            double e_max, double t,
                                            const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(e_min < e_max))
        throw std::invalid_argument("integrate_oscillatory: requires e_min < e_max");
    if (t < 0.0)
        throw std::invalid_argument("integrate_oscillatory: requires t >= 0");

    if (t == 0.0) {
        IntegralResult r = integrate_adaptive(g, e_min, e_max, cfg);
        return {{r.value, 0.0}, r.error, r.converged, r.panels};
    }

    using C = std::complex<double>;
    auto integrand = [&](double e) -> C {
        return g(e) * std::polar(1.0, -e * t);
    };

    const double period = 2.0 * std::numbers::pi / t;
    const double cap = period / cfg.oscillation_points_per_period;
    const double span = e_max - e_min;
    long n_seed = static_cast<long>(std::ceil(span / cap));
    n_seed = std::max(n_seed, 1L);
    if (n_seed > cfg.max_panels) {
        throw std::invalid_argument(
            "integrate_oscillatory: oscillation cap needs " +
            std::to_string(n_seed) + " panels, above max_panels");
    }

    std::vector<Panel<C>> panels;
    panels.reserve(static_cast<std::size_t>(n_seed));
    const double h = span / static_cast<double>(n_seed);
    for (long i = 0; i < n_seed; ++i) {
        const double a = e_min + h * static_cast<double>(i);
        const double b = (i + 1 == n_seed) ? e_max : a + h;
        panels.push_back(gk15<C>(integrand, a, b));
    }
    auto out = refine<C>(integrand, panels, cfg);
    return {out.value, out.error, out.converged, out.panels};
}

double find_root_bisect(const RealFn& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("find_root_bisect: requires lo < hi");
    if (!(tol > 0.0)) throw std::invalid_argument("find_root_bisect: requires tol > 0");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo * fhi < 0.0))
        throw std::invalid_argument("find_root_bisect: no sign change on [lo, hi]");

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // hit double-precision resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

Derivative differentiate_central(const RealFn& f, double x, double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("differentiate_central: requires step > 0");
    const double d1 = (f(x + step) - f(x - step)) / (2.0 * step);
    const double h2 = 0.5 * step;
    const double d2 = (f(x + h2) - f(x - h2)) / (2.0 * h2);
    Derivative out;
    out.value = (4.0 * d2 - d1) / 3.0;  // Richardson: cancels the O(h^2) term
    out.error = std::abs(out.value - d2);
    return out;
}

double power_law_tail(double rho_at_boundary, double boundary, double exponent,
                      int moment_order) {
    const double p = exponent + moment_order;
    if (!(p < -1.0))
        throw std::domain_error("power_law_tail: tail integral diverges");
    if (!(boundary > 0.0))
        throw std::invalid_argument("power_law_tail: requires boundary > 0");
    return rho_at_boundary * std::pow(boundary, moment_order) * boundary /
           (-p - 1.0);
}

}  // namespace decaylab::numerics
