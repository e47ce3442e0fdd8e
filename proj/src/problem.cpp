#include "foxopt/problem.hpp"

#include <algorithm>
#include <stdexcept>

namespace foxopt {

void validate(const BoundedProblem& problem) {
    if (problem.dim == 0) {
        throw std::invalid_argument("problem '" + problem.name + "': dim must be >= 1");
    }
    if (problem.lower.size() != problem.dim || problem.upper.size() != problem.dim) {
        throw std::invalid_argument("problem '" + problem.name + "': bound lengths != dim");
    }
    for (std::size_t i = 0; i < problem.dim; ++i) {
        if (!(problem.lower[i] < problem.upper[i])) {
            throw std::invalid_argument("problem '" + problem.name +
                                        "': lower[i] < upper[i] violated");
        }
    }
    if (!problem.objective) {
        throw std::invalid_argument("problem '" + problem.name + "': objective not set");
    }
}

Vec clamp(const Vec& x, const Vec& lower, const Vec& upper) {
    if (x.size() != lower.size() || x.size() != upper.size()) {
        throw std::invalid_argument("clamp: dimension mismatch");
    }
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = std::clamp(x[i], lower[i], upper[i]);
    }
    return out;
}

Vec clamp(const Vec& x, const BoundedProblem& problem) {
    return clamp(x, problem.lower, problem.upper);
}

bool in_bounds(const Vec& x, const BoundedProblem& problem) {
    if (x.size() != problem.dim) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < problem.lower[i] || x[i] > problem.upper[i]) {
            return false;
        }
    }
    return true;
}

} // namespace foxopt
