#include "foxopt/engineering/constrained.hpp"

#include <cmath>
#include <stdexcept>

namespace foxopt::eng {

Vec apply_integrality(const ConstrainedProblem& problem, Vec x) {
    if (problem.integer_mask.empty()) {
        return x;
    }
    for (std::size_t i = 0; i < x.size() && i < problem.integer_mask.size(); ++i) {
        if (problem.integer_mask[i]) {
            x[i] = std::round(x[i]);
        }
    }
    return x;
}

double raw_objective(const ConstrainedProblem& problem, const Vec& x) {
    return problem.base.objective(apply_integrality(problem, x));
}

Vec violations(const ConstrainedProblem& problem, const Vec& x) {
    const Vec z = apply_integrality(problem, x);
    Vec out(problem.constraints.size());
    for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
        out[i] = std::max(0.0, problem.constraints[i](z));
    }
    return out;
}

double penalized(const ConstrainedProblem& problem, const Vec& x) {
    const Vec z = apply_integrality(problem, x);
    double penalty = 0.0;
    for (const auto& g : problem.constraints) {
        const double v = std::max(0.0, g(z));
        penalty += v * v;
    }
    return problem.base.objective(z) + problem.penalty_coefficient * penalty;
}

BoundedProblem as_bounded(const ConstrainedProblem& problem) {
    BoundedProblem out = problem.base;
    // Copy the catalog entry so the callable owns everything it needs.
    ConstrainedProblem owned = problem;
    out.objective = [owned = std::move(owned)](const Vec& x) { return penalized(owned, x); };
    out.known_optimum.reset();
    return out;
}

} // namespace foxopt::eng
