#include <cmath>
#include <numbers>

#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

// Pressure vessel design, after Sandgren (1990) / Coello (2000).
// Variables: shell thickness Ts, head thickness Th, inner radius R,
// cylindrical length L. Minimizes material, forming and welding cost.
ConstrainedProblem make_pvd() {
    constexpr double pi = std::numbers::pi;

    ConstrainedProblem p;
    p.base.name = "pvd";
    p.base.dim = 4;
    p.base.lower = {0.0, 0.0, 10.0, 10.0};
    p.base.upper = {99.0, 99.0, 200.0, 200.0};
    p.base.objective = [](const Vec& x) {
        const double ts = x[0], th = x[1], r = x[2], l = x[3];
        return 0.6224 * ts * r * l + 1.7781 * th * r * r + 3.1661 * ts * ts * l +
               19.84 * ts * ts * r;
    };
    p.constraints = {
        [](const Vec& x) { return -x[0] + 0.0193 * x[2]; },
        [](const Vec& x) { return -x[1] + 0.00954 * x[2]; },
        [](const Vec& x) {
            return -pi * x[2] * x[2] * x[3] - (4.0 / 3.0) * pi * x[2] * x[2] * x[2] + 1296000.0;
        },
        [](const Vec& x) { return x[3] - 240.0; },
    };
    p.reference_feasible = {1.2, 0.6, 60.0, 80.0};
    return p;
}

} // namespace foxopt::eng
