#pragma once

#include <optional>
#include <vector>

#include "foxopt/fox.hpp"
#include "foxopt/problem.hpp"
#include "foxopt/rng.hpp"

namespace foxopt::ifox {

/// Jump formula and travel-time sampling shared with the baseline.
using fox::jump_height;
using fox::kHalfGravity;
using fox::sample_travel_time;

struct Options {
    /// Re-evaluate every agent in the update pass instead of serving the
    /// fitness cached by balance (three evaluations per agent per epoch).
    /// Decisions are unchanged either way.
    bool strict_reeval = false;
};

/// Per-epoch state. There is no c1/c2/a/mint here: the step-scale schedule
/// alpha and the per-agent beta vector replace all four knobs.
struct State {
    Vec best_x;
    double best_f = std::numeric_limits<double>::infinity();
    double alpha = 1.0;
    double alpha_min = 0.0; // 1 / (0.5 * epochs)
    Vec dist;               // 0.5 * best_x, refreshed per epoch
    Vec time_st;            // feeds the jump only
    double jump = 0.0;
    std::size_t it = 0;
    std::size_t epochs = 0;
};

/// Fox-to-prey distance: half of the best solution.
Vec half_distance(const Vec& best_x);

/// Linear step-scale decay from 1.0 at it=0 to alpha_min = 1/(0.5*epochs) at
/// it=epochs. Throws std::invalid_argument when epochs == 0.
double alpha_schedule(std::size_t it, std::size_t epochs);

struct BetaDraw {
    Vec values;
    bool levy_branch = false;
};

/// Per-agent perturbation: with probability alpha a Levy flight scaled by
/// alpha, otherwise uniform in (-alpha, alpha) per dimension.
BetaDraw beta_vector(RngStream& rng, double alpha, std::size_t dim);

/// Exploitation candidate (pre-clamp): dist (.) beta * jump.
Vec exploit_move(const Vec& dist, const Vec& beta, double jump);

/// Exploration candidate (pre-clamp): best_x + beta * alpha.
Vec explore_move(const Vec& best_x, const Vec& beta, double alpha);

struct BalanceOutcome {
    Vec position;
    std::optional<double> fitness; // set when xt/xr was selected (already evaluated)
    bool opposition = false;
};

/// Fitness-driven selection between the exploitation candidate xt and the
/// exploration candidate xr, with a probabilistic opposition move
/// lb + ub - best_x. Evaluates xt and xr exactly once each (both counted);
/// the winner's fitness is cached so the caller need not re-evaluate it.
/// The opposition point is returned unevaluated.
BalanceOutcome balance(const Vec& best_x, const Vec& xt, const Vec& xr, const Vec& beta,
                       const BoundedProblem& problem, RngStream& rng,
                       std::uint64_t& evaluations);

State make_state(const BoundedProblem& problem, const OptimizerConfig& config, RngStream& rng,
                 std::vector<Vec>& population, std::uint64_t& evaluations);

/// Advances one epoch of the main loop: distance, jump and alpha once per
/// epoch; beta/xt/xr/balance per agent; then the elitist update pass.
void step(State& state, std::vector<Vec>& population, const BoundedProblem& problem,
          RngStream& rng, std::uint64_t& evaluations, StepCounters& counters,
          const Options& options = {});

RunTrace run(const BoundedProblem& problem, const OptimizerConfig& config,
             const Options& options = {});

} // namespace foxopt::ifox
