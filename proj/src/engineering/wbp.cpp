#include <cmath>

#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

// Welded beam design, after Coello (2000). Variables: weld thickness h,
// weld length l, beam height t, beam thickness b. Minimizes fabrication
// cost under shear, bending, buckling and deflection limits.
namespace {

constexpr double kLoad = 6000.0;     // P, lb
constexpr double kBeamLen = 14.0;    // L, in
constexpr double kYoung = 30e6;      // E, psi
constexpr double kShearMod = 12e6;   // G, psi
constexpr double kTauMax = 13600.0;  // psi
constexpr double kSigmaMax = 30000.0;
constexpr double kDeltaMax = 0.25; // in

double shear_stress(const Vec& x) {
    const double h = x[0], l = x[1], t = x[2];
    const double tau1 = kLoad / (std::sqrt(2.0) * h * l);
    const double m = kLoad * (kBeamLen + l / 2.0);
    const double r = std::sqrt(l * l / 4.0 + (h + t) * (h + t) / 4.0);
    const double j = 2.0 * (std::sqrt(2.0) * h * l * (l * l / 12.0 + (h + t) * (h + t) / 4.0));
    const double tau2 = m * r / j;
    return std::sqrt(tau1 * tau1 + 2.0 * tau1 * tau2 * l / (2.0 * r) + tau2 * tau2);
}

double bending_stress(const Vec& x) {
    return 6.0 * kLoad * kBeamLen / (x[3] * x[2] * x[2]);
}

double deflection(const Vec& x) {
    return 4.0 * kLoad * std::pow(kBeamLen, 3) / (kYoung * std::pow(x[2], 3) * x[3]);
}

double buckling_load(const Vec& x) {
    const double t = x[2], b = x[3];
    const double term = 4.013 * kYoung * std::sqrt(t * t * std::pow(b, 6) / 36.0) /
                        (kBeamLen * kBeamLen);
    return term * (1.0 - t / (2.0 * kBeamLen) * std::sqrt(kYoung / (4.0 * kShearMod)));
}

} // namespace

ConstrainedProblem make_wbp() {
    ConstrainedProblem p;
    p.base.name = "wbp";
    p.base.dim = 4;
    p.base.lower = {0.1, 0.1, 0.1, 0.1};
    p.base.upper = {2.0, 10.0, 10.0, 2.0};
    p.base.objective = [](const Vec& x) {
        return 1.10471 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]);
    };
    p.constraints = {
        [](const Vec& x) { return shear_stress(x) - kTauMax; },
        [](const Vec& x) { return bending_stress(x) - kSigmaMax; },
        [](const Vec& x) { return x[0] - x[3]; },
        [](const Vec& x) {
            return 0.10471 * x[0] * x[0] + 0.04811 * x[2] * x[3] * (14.0 + x[1]) - 5.0;
        },
        [](const Vec& x) { return 0.125 - x[0]; },
        [](const Vec& x) { return deflection(x) - kDeltaMax; },
        [](const Vec& x) { return kLoad - buckling_load(x); },
    };
    p.reference_feasible = {0.3, 3.0, 9.0, 0.35};
    return p;
}

} // namespace foxopt::eng
