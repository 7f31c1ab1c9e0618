#pragma once

#include <vector>

namespace decaylab::numerics {

// Shape-preserving cubic Hermite interpolant (Fritsch-Carlson slopes).
// Evaluation clamps to the node range.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double front_x() const { return x_.front(); }
    double back_x() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> slope_;
};

// Piecewise-linear interpolant; evaluation outside the node range returns 0
// (tabulated form factors vanish outside their support).
class LinearInterpolant {
public:
    LinearInterpolant() = default;
    LinearInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double front_x() const { return x_.front(); }
    double back_x() const { return x_.back(); }

private:
    std::vector<double> x_;
    std::vector<double> y_;
};

}  // namespace decaylab::numerics
