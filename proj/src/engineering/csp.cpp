#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

// Car side-impact design, after Gu et al. (2001); response-surface
// formulation as in the real-world test-suite of Kumar et al. (2020).
// Eleven variables: seven structural thicknesses, two material properties
// (kept continuous in [0.192, 0.345], the common relaxation of the discrete
// material choice) and two barrier parameters. Minimizes door weight under
// ten crashworthiness constraints.
ConstrainedProblem make_csp() {
    ConstrainedProblem p;
    p.base.name = "csp";
    p.base.dim = 11;
    p.base.lower = {0.5, 0.45, 0.5, 0.5, 0.875, 0.4, 0.4, 0.192, 0.192, -30.0, -30.0};
    p.base.upper = {1.5, 1.35, 1.5, 1.5, 2.625, 1.2, 1.2, 0.345, 0.345, 30.0, 30.0};
    p.base.objective = [](const Vec& x) {
        return 1.98 + 4.90 * x[0] + 6.67 * x[1] + 6.98 * x[2] + 4.01 * x[3] + 1.78 * x[4] +
               2.73 * x[6];
    };
    p.constraints = {
        // abdomen load <= 1 kN
        [](const Vec& x) {
            return 1.16 - 0.3717 * x[1] * x[3] - 0.00931 * x[1] * x[9] - 0.484 * x[2] * x[8] +
                   0.01343 * x[5] * x[9] - 1.0;
        },
        // upper viscous criterion <= 0.32 m/s
        [](const Vec& x) {
            return 0.261 - 0.0159 * x[0] * x[1] - 0.188 * x[0] * x[7] - 0.019 * x[1] * x[6] +
                   0.0144 * x[2] * x[4] + 0.0008757 * x[4] * x[9] + 0.08045 * x[5] * x[8] +
                   0.00139 * x[7] * x[10] + 0.00001575 * x[9] * x[10] - 0.32;
        },
        // middle viscous criterion <= 0.32 m/s
        [](const Vec& x) {
            return 0.214 + 0.00817 * x[4] - 0.131 * x[0] * x[7] - 0.0704 * x[0] * x[8] +
                   0.03099 * x[1] * x[5] - 0.018 * x[1] * x[6] + 0.0208 * x[2] * x[7] +
                   0.121 * x[2] * x[8] - 0.00364 * x[4] * x[5] + 0.0007715 * x[4] * x[9] -
                   0.0005354 * x[5] * x[9] + 0.00121 * x[7] * x[10] + 0.00184 * x[8] * x[9] -
                   0.018 * x[1] * x[1] - 0.32;
        },
        // lower viscous criterion <= 0.32 m/s
        [](const Vec& x) {
            return 0.74 - 0.61 * x[1] - 0.163 * x[2] * x[7] + 0.001232 * x[2] * x[9] -
                   0.166 * x[6] * x[8] + 0.227 * x[1] * x[1] - 0.32;
        },
        // upper rib deflection <= 32 mm
        [](const Vec& x) {
            return 28.98 + 3.818 * x[2] - 4.2 * x[0] * x[1] + 0.0207 * x[4] * x[9] +
                   6.63 * x[5] * x[8] - 7.77 * x[6] * x[7] + 0.32 * x[8] * x[9] - 32.0;
        },
        // middle rib deflection <= 32 mm
        [](const Vec& x) {
            return 33.86 + 2.95 * x[2] + 0.1792 * x[9] - 5.057 * x[0] * x[1] -
                   11.0 * x[1] * x[7] - 0.0215 * x[4] * x[9] - 9.98 * x[6] * x[7] +
                   22.0 * x[7] * x[8] - 32.0;
        },
        // lower rib deflection <= 32 mm
        [](const Vec& x) {
            return 46.36 - 9.9 * x[1] - 12.9 * x[0] * x[7] + 0.1107 * x[2] * x[9] - 32.0;
        },
        // pubic symphysis force <= 4 kN
        [](const Vec& x) {
            return 4.72 - 0.5 * x[3] - 0.19 * x[1] * x[2] - 0.0122 * x[3] * x[9] +
                   0.009325 * x[5] * x[9] + 0.000191 * x[10] * x[10] - 4.0;
        },
        // B-pillar velocity <= 9.9 mm/ms
        [](const Vec& x) {
            return 10.58 - 0.674 * x[0] * x[1] - 1.95 * x[1] * x[7] + 0.02054 * x[2] * x[9] -
                   0.0198 * x[3] * x[9] + 0.028 * x[5] * x[9] - 9.9;
        },
        // front door velocity <= 15.7 mm/ms
        [](const Vec& x) {
            return 16.45 - 0.489 * x[2] * x[6] - 0.843 * x[4] * x[5] + 0.0432 * x[8] * x[9] -
                   0.0556 * x[8] * x[10] - 0.000786 * x[10] * x[10] - 15.7;
        },
    };
    p.reference_feasible = {1.0, 1.2, 1.2, 1.2, 2.0, 1.0, 1.0, 0.3, 0.3, -20.0, 0.0};
    return p;
}

} // namespace foxopt::eng
