#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

// Gear train design, after Sandgren (1990). Four integer tooth counts
// Ta, Tb, Td, Tf in [12, 60]; minimizes the squared deviation of the
// train ratio Tb*Td / (Ta*Tf) from the required 1/6.931.
ConstrainedProblem make_gtp() {
    ConstrainedProblem p;
    p.base.name = "gtp";
    p.base.dim = 4;
    p.base.lower = {12.0, 12.0, 12.0, 12.0};
    p.base.upper = {60.0, 60.0, 60.0, 60.0};
    p.base.objective = [](const Vec& x) {
        const double ratio = (x[1] * x[2]) / (x[0] * x[3]);
        const double diff = 1.0 / 6.931 - ratio;
        return diff * diff;
    };
    p.integer_mask = {true, true, true, true};
    p.reference_feasible = {49.0, 16.0, 19.0, 43.0};
    return p;
}

} // namespace foxopt::eng
