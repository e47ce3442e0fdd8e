#include <cmath>

#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

// Speed reducer (gearbox) design, after Golinski (1970). Variables: face
// width b, tooth module m, pinion teeth z (integer), shaft lengths l1 l2,
// shaft diameters d1 d2. Minimizes total mass under gear bending/surface
// stress and shaft stress/deflection constraints.
ConstrainedProblem make_srp() {
    ConstrainedProblem p;
    p.base.name = "srp";
    p.base.dim = 7;
    p.base.lower = {2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0};
    p.base.upper = {3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5};
    p.base.objective = [](const Vec& x) {
        const double b = x[0], m = x[1], z = x[2], l1 = x[3], l2 = x[4], d1 = x[5], d2 = x[6];
        return 0.7854 * b * m * m * (3.3333 * z * z + 14.9334 * z - 43.0934) -
               1.508 * b * (d1 * d1 + d2 * d2) + 7.4777 * (std::pow(d1, 3) + std::pow(d2, 3)) +
               0.7854 * (l1 * d1 * d1 + l2 * d2 * d2);
    };
    p.constraints = {
        [](const Vec& x) { return 27.0 / (x[0] * x[1] * x[1] * x[2]) - 1.0; },
        [](const Vec& x) { return 397.5 / (x[0] * x[1] * x[1] * x[2] * x[2]) - 1.0; },
        [](const Vec& x) {
            return 1.93 * std::pow(x[3], 3) / (x[1] * x[2] * std::pow(x[5], 4)) - 1.0;
        },
        [](const Vec& x) {
            return 1.93 * std::pow(x[4], 3) / (x[1] * x[2] * std::pow(x[6], 4)) - 1.0;
        },
        [](const Vec& x) {
            const double t = 745.0 * x[3] / (x[1] * x[2]);
            return std::sqrt(t * t + 16.9e6) / (110.0 * std::pow(x[5], 3)) - 1.0;
        },
        [](const Vec& x) {
            const double t = 745.0 * x[4] / (x[1] * x[2]);
            return std::sqrt(t * t + 157.5e6) / (85.0 * std::pow(x[6], 3)) - 1.0;
        },
        [](const Vec& x) { return x[1] * x[2] / 40.0 - 1.0; },
        [](const Vec& x) { return 5.0 * x[1] / x[0] - 1.0; },
        [](const Vec& x) { return x[0] / (12.0 * x[1]) - 1.0; },
        [](const Vec& x) { return (1.5 * x[5] + 1.9) / x[3] - 1.0; },
        [](const Vec& x) { return (1.1 * x[6] + 1.9) / x[4] - 1.0; },
    };
    p.integer_mask = {false, false, true, false, false, false, false};
    p.reference_feasible = {3.5, 0.7, 17.0, 7.3, 7.8, 3.4, 5.3};
    return p;
}

} // namespace foxopt::eng
