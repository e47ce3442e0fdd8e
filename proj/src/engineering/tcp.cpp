#include <cmath>
#include <numbers>

#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

// Tubular column design, after Rao (1996). Variables: mean column diameter d
// and tube thickness t. Minimizes material plus construction cost while the
// column carries a compressive load without yielding or buckling.
namespace {

constexpr double kLoad = 2500.0;    // kgf
constexpr double kYield = 500.0;    // kgf/cm^2
constexpr double kModulus = 0.85e6; // kgf/cm^2
constexpr double kLength = 250.0;   // cm

} // namespace

ConstrainedProblem make_tcp() {
    constexpr double pi = std::numbers::pi;

    ConstrainedProblem p;
    p.base.name = "tcp";
    p.base.dim = 2;
    p.base.lower = {2.0, 0.2};
    p.base.upper = {14.0, 0.8};
    p.base.objective = [](const Vec& x) { return 9.8 * x[0] * x[1] + 2.0 * x[0]; };
    p.constraints = {
        [pi](const Vec& x) { return kLoad / (pi * x[0] * x[1] * kYield) - 1.0; },
        [pi](const Vec& x) {
            const double d = x[0], t = x[1];
            return 8.0 * kLoad * kLength * kLength /
                       (std::pow(pi, 3) * kModulus * d * t * (d * d + t * t)) -
                   1.0;
        },
        [](const Vec& x) { return 2.0 / x[0] - 1.0; },
        [](const Vec& x) { return x[0] / 14.0 - 1.0; },
        [](const Vec& x) { return 0.2 / x[1] - 1.0; },
        [](const Vec& x) { return x[1] / 0.8 - 1.0; },
    };
    p.reference_feasible = {6.0, 0.35};
    return p;
}

} // namespace foxopt::eng
