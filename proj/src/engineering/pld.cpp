#include <cmath>
#include <numbers>

#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

// Piston lever design, after Vanderplaats (1984); the formulation follows the
// real-world test-suite of Kumar et al. (2020). Variables: H, B, D, X locate
// the piston components; minimizes the oil volume swept while the lever lifts
// from 0 to 45 degrees.
namespace {

constexpr double kLoad = 10000.0; // lbs
constexpr double kLever = 240.0;  // in
constexpr double kMaxMoment = 1.8e6;
constexpr double kPressure = 1500.0; // psi

double l1(const Vec& x) {
    const double h = x[0], b = x[1], xx = x[3];
    return std::sqrt((xx - b) * (xx - b) + h * h);
}

double l2(const Vec& x) {
    const double h = x[0], b = x[1], xx = x[3];
    const double s = std::numbers::sqrt2 / 2.0; // sin 45 = cos 45
    const double u = xx * s + h;
    const double v = b - xx * s;
    return std::sqrt(u * u + v * v);
}

double reaction_arm(const Vec& x) {
    const double h = x[0], b = x[1], xx = x[3];
    const double s = std::numbers::sqrt2 / 2.0;
    return std::fabs(-xx * (xx * s + h) + h * (b - xx * s)) / l1(x);
}

double piston_force(const Vec& x) {
    constexpr double pi = std::numbers::pi;
    return pi * kPressure * x[2] * x[2] / 4.0;
}

} // namespace

ConstrainedProblem make_pld() {
    constexpr double pi = std::numbers::pi;

    ConstrainedProblem p;
    p.base.name = "pld";
    p.base.dim = 4;
    p.base.lower = {0.05, 0.05, 0.05, 0.05};
    p.base.upper = {500.0, 500.0, 120.0, 500.0};
    p.base.objective = [pi](const Vec& x) {
        return 0.25 * pi * x[2] * x[2] * (l2(x) - l1(x));
    };
    p.constraints = {
        [](const Vec& x) {
            const double s = std::numbers::sqrt2 / 2.0; // cos 45
            return kLoad * kLever * s - reaction_arm(x) * piston_force(x);
        },
        [](const Vec& x) { return kLoad * (kLever - x[3]) - kMaxMoment; },
        [](const Vec& x) { return 1.2 * (l2(x) - l1(x)) - l1(x); },
        [](const Vec& x) { return x[2] / 2.0 - x[1]; },
    };
    p.reference_feasible = {300.0, 100.0, 100.0, 100.0};
    return p;
}

} // namespace foxopt::eng
