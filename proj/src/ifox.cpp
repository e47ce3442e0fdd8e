#include "foxopt/ifox.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace foxopt::ifox {

Vec half_distance(const Vec& best_x) {
    Vec out(best_x.size());
    for (std::size_t i = 0; i < best_x.size(); ++i) {
        out[i] = best_x[i] * 0.5;
    }
    return out;
}

double alpha_schedule(std::size_t it, std::size_t epochs) {
    if (epochs == 0) {
        throw std::invalid_argument("alpha_schedule: epochs must be >= 1");
    }
    const double alpha_min = 1.0 / (0.5 * static_cast<double>(epochs));
    const double progress = static_cast<double>(it) / static_cast<double>(epochs);
    return alpha_min + (1.0 - alpha_min) * (1.0 - progress);
}

BetaDraw beta_vector(RngStream& rng, double alpha, std::size_t dim) {
    BetaDraw draw;
    if (rng.unit() < alpha) {
        draw.levy_branch = true;
        draw.values = levy_flight(rng, dim);
        for (double& v : draw.values) {
            v *= alpha;
        }
    } else {
        draw.levy_branch = false;
        draw.values = uniform(rng, -alpha, alpha, dim);
    }
    return draw;
}

Vec exploit_move(const Vec& dist, const Vec& beta, double jump) {
    if (dist.size() != beta.size()) {
        throw std::invalid_argument("exploit_move: dimension mismatch");
    }
    Vec out(dist.size());
    for (std::size_t i = 0; i < dist.size(); ++i) {
        out[i] = dist[i] * beta[i] * jump;
    }
    return out;
}

Vec explore_move(const Vec& best_x, const Vec& beta, double alpha) {
    if (best_x.size() != beta.size()) {
        throw std::invalid_argument("explore_move: dimension mismatch");
    }
    Vec out(best_x.size());
    for (std::size_t i = 0; i < best_x.size(); ++i) {
        out[i] = best_x[i] + beta[i] * alpha;
    }
    return out;
}

BalanceOutcome balance(const Vec& best_x, const Vec& xt, const Vec& xr, const Vec& beta,
                       const BoundedProblem& problem, RngStream& rng,
                       std::uint64_t& evaluations) {
    const double f1 = problem.objective(xt);
    const double f2 = problem.objective(xr);
    evaluations += 2;

    const double beta_min = *std::min_element(beta.begin(), beta.end());
    BalanceOutcome outcome;
    if (rng.unit() <= beta_min) {
        outcome.opposition = true;
        outcome.position.resize(best_x.size());
        for (std::size_t i = 0; i < best_x.size(); ++i) {
            outcome.position[i] = problem.lower[i] + problem.upper[i] - best_x[i];
        }
        outcome.position = clamp(outcome.position, problem);
    } else if (f1 <= f2) {
        outcome.position = xt;
        outcome.fitness = f1;
    } else {
        outcome.position = xr;
        outcome.fitness = f2;
    }
    return outcome;
}

State make_state(const BoundedProblem& problem, const OptimizerConfig& config, RngStream& rng,
                 std::vector<Vec>& population, std::uint64_t& evaluations) {
    validate(problem);
    if (config.population == 0) {
        throw std::invalid_argument("ifox: population must be >= 1");
    }

    State state;
    state.epochs = config.epochs;
    if (config.epochs > 0) {
        state.alpha_min = 1.0 / (0.5 * static_cast<double>(config.epochs));
    }

    population.resize(config.population);
    for (Vec& agent : population) {
        agent.resize(problem.dim);
        for (std::size_t d = 0; d < problem.dim; ++d) {
            agent[d] = rng.uniform(problem.lower[d], problem.upper[d]);
        }
        const double f = problem.objective(agent);
        ++evaluations;
        if (f < state.best_f) {
            state.best_f = f;
            state.best_x = agent;
        }
    }
    return state;
}

void step(State& state, std::vector<Vec>& population, const BoundedProblem& problem,
          RngStream& rng, std::uint64_t& evaluations, StepCounters& counters,
          const Options& options) {
    state.dist = half_distance(state.best_x);
    state.time_st = sample_travel_time(rng, problem.dim);
    state.jump = jump_height(state.time_st);
    state.alpha = alpha_schedule(state.it, state.epochs);

    // The move pass works against the epoch-start best; the elite is only
    // replaced in the update pass below.
    std::vector<std::optional<double>> cached(population.size());
    for (std::size_t fa = 0; fa < population.size(); ++fa) {
        const BetaDraw beta = beta_vector(rng, state.alpha, problem.dim);
        const Vec xt = clamp(exploit_move(state.dist, beta.values, state.jump), problem);
        const Vec xr = clamp(explore_move(state.best_x, beta.values, state.alpha), problem);
        BalanceOutcome chosen =
            balance(state.best_x, xt, xr, beta.values, problem, rng, evaluations);
        if (chosen.opposition) {
            ++counters.opposition;
        } else if (chosen.position == xt) {
            ++counters.exploit;
        } else {
            ++counters.explore;
        }
        population[fa] = std::move(chosen.position);
        cached[fa] = chosen.fitness;
    }

    for (std::size_t fa = 0; fa < population.size(); ++fa) {
        double f;
        if (!options.strict_reeval && cached[fa]) {
            f = *cached[fa];
        } else {
            f = problem.objective(population[fa]);
            ++evaluations;
        }
        if (f <= state.best_f) {
            state.best_f = f;
            state.best_x = population[fa];
        }
    }
    ++state.it;
}

RunTrace run(const BoundedProblem& problem, const OptimizerConfig& config,
             const Options& options) {
    const auto start = std::chrono::steady_clock::now();

    RngStream rng(config.seed);
    std::vector<Vec> population;
    RunTrace trace;
    State state = make_state(problem, config, rng, population, trace.evaluations);

    trace.best_per_epoch.reserve(config.epochs);
    for (std::size_t it = 0; it < config.epochs; ++it) {
        step(state, population, problem, rng, trace.evaluations, trace.counters, options);
        trace.best_per_epoch.push_back(state.best_f);
    }

    trace.final_best_x = state.best_x;
    trace.final_best_f = state.best_f;
    trace.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return trace;
}

} // namespace foxopt::ifox
