#include <cmath>

#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

// Tension/compression spring design, after Arora (1989) / Coello (2000).
// Variables: wire diameter d, mean coil diameter D, number of active coils N.
// Minimizes spring weight under shear stress, surge frequency and deflection
// constraints.
ConstrainedProblem make_csd() {
    ConstrainedProblem p;
    p.base.name = "csd";
    p.base.dim = 3;
    p.base.lower = {0.05, 0.25, 2.0};
    p.base.upper = {2.0, 1.3, 15.0};
    p.base.objective = [](const Vec& x) {
        const double d = x[0], dc = x[1], n = x[2];
        return (n + 2.0) * dc * d * d;
    };
    p.constraints = {
        [](const Vec& x) {
            const double d = x[0], dc = x[1], n = x[2];
            return 1.0 - dc * dc * dc * n / (71785.0 * std::pow(d, 4));
        },
        [](const Vec& x) {
            const double d = x[0], dc = x[1];
            return (4.0 * dc * dc - d * dc) / (12566.0 * (dc * std::pow(d, 3) - std::pow(d, 4))) +
                   1.0 / (5108.0 * d * d) - 1.0;
        },
        [](const Vec& x) {
            const double d = x[0], dc = x[1], n = x[2];
            return 1.0 - 140.45 * d / (dc * dc * n);
        },
        [](const Vec& x) { return (x[0] + x[1]) / 1.5 - 1.0; },
    };
    p.reference_feasible = {0.06, 0.45, 14.0};
    return p;
}

} // namespace foxopt::eng
