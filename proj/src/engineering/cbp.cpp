#include <cmath>

#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

// Cantilever beam design, after Chickermane & Gea (1996). Five square
// cross-section heights; minimizes weight under a single tip-deflection
// constraint.
ConstrainedProblem make_cbp() {
    ConstrainedProblem p;
    p.base.name = "cbp";
    p.base.dim = 5;
    p.base.lower = Vec(5, 0.01);
    p.base.upper = Vec(5, 100.0);
    p.base.objective = [](const Vec& x) {
        return 0.0624 * (x[0] + x[1] + x[2] + x[3] + x[4]);
    };
    p.constraints = {
        [](const Vec& x) {
            return 61.0 / std::pow(x[0], 3) + 37.0 / std::pow(x[1], 3) +
                   19.0 / std::pow(x[2], 3) + 7.0 / std::pow(x[3], 3) +
                   1.0 / std::pow(x[4], 3) - 1.0;
        },
    };
    p.reference_feasible = {10.0, 10.0, 10.0, 10.0, 10.0};
    return p;
}

} // namespace foxopt::eng
