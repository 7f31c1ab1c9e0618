#include "decaylab/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace decaylab::numerics {

namespace {

void check_nodes(const std::vector<double>& x, const std::vector<double>& y,
                 const char* who) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument(std::string(who) +
                                    ": need matching node arrays of size >= 2");
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1]))
            throw std::invalid_argument(std::string(who) +
                                        ": nodes must be strictly increasing");
    }
}

std::size_t locate(const std::vector<double>& x, double v) {
    auto it = std::upper_bound(x.begin(), x.end(), v);
    std::size_t idx = static_cast<std::size_t>(it - x.begin());
    if (idx == 0) return 0;
    if (idx >= x.size()) return x.size() - 2;
    return idx - 1;
}

}  // namespace

PchipInterpolant::PchipInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    check_nodes(x_, y_, "PchipInterpolant");
    const std::size_t n = x_.size();
    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        d[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    slope_.assign(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            slope_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    // One-sided endpoint slopes with the standard monotonicity clamp.
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (m * d0 <= 0.0)
            m = 0.0;
        else if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0))
            m = 3.0 * d0;
        return m;
    };
    if (n == 2) {
        slope_[0] = slope_[1] = d[0];
    } else {
        slope_[0] = endpoint(h[0], h[1], d[0], d[1]);
        slope_[n - 1] = endpoint(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    }
}

double PchipInterpolant::operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const std::size_t i = locate(x_, x);
    const double h = x_[i + 1] - x_[i];
    const double s = (x - x_[i]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * y_[i] + h * h10 * slope_[i] + h01 * y_[i + 1] +
           h * h11 * slope_[i + 1];
}

LinearInterpolant::LinearInterpolant(std::vector<double> x,
                                     std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    check_nodes(x_, y_, "LinearInterpolant");
}

double LinearInterpolant::operator()(double x) const {
    if (x < x_.front() || x > x_.back()) return 0.0;
    const std::size_t i = locate(x_, x);
    const double s = (x - x_[i]) / (x_[i + 1] - x_[i]);
    return y_[i] + s * (y_[i + 1] - y_[i]);
}

}  // namespace decaylab::numerics
