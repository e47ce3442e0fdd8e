#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "foxopt/rng.hpp"

namespace foxopt {

/// A box-bounded minimization problem: the unit every optimizer consumes.
/// The objective must be deterministic (same input, same output) and finite
/// anywhere inside the bounds box.
struct BoundedProblem {
    std::string name;
    std::size_t dim = 0;
    Vec lower;
    Vec upper;
    std::function<double(const Vec&)> objective;
    std::optional<double> known_optimum; // for relative-error reporting
};

/// Throws std::invalid_argument unless dim >= 1, bound vectors have length
/// dim, lower[i] < upper[i] everywhere, and the objective is set.
void validate(const BoundedProblem& problem);

/// Projects each coordinate into [lower[i], upper[i]]. Idempotent, no-op on
/// in-bounds points. Throws std::invalid_argument on dimension mismatch.
Vec clamp(const Vec& x, const Vec& lower, const Vec& upper);
Vec clamp(const Vec& x, const BoundedProblem& problem);

bool in_bounds(const Vec& x, const BoundedProblem& problem);

/// Shared run settings; defaults are the standard experiment configuration
/// (500 epochs, 30 agents).
struct OptimizerConfig {
    std::size_t epochs = 500;
    std::size_t population = 30;
    std::uint64_t seed = 1;
};

/// Per-move tallies, useful for observing how a run actually behaved.
/// fox fills exploit/explore; ifox additionally counts opposition moves.
struct StepCounters {
    std::uint64_t exploit = 0;
    std::uint64_t explore = 0;
    std::uint64_t opposition = 0;
};

/// Everything recorded about one trial.
struct RunTrace {
    Vec best_per_epoch; // elitist, never increases
    Vec final_best_x;
    double final_best_f = std::numeric_limits<double>::infinity();
    std::uint64_t evaluations = 0;
    double wall_seconds = 0.0;
    StepCounters counters;
};

} // namespace foxopt
