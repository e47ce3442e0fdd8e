#include "foxopt/fox.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace foxopt::fox {

Vec sample_travel_time(RngStream& rng, std::size_t dim) {
    Vec t(dim);
    for (double& v : t) {
        do {
            v = rng.unit();
        } while (v == 0.0);
    }
    return t;
}

Vec sound_distance(const Vec& best_x, const Vec& time_st) {
    if (best_x.size() != time_st.size()) {
        throw std::invalid_argument("sound_distance: dimension mismatch");
    }
    Vec out(best_x.size());
    for (std::size_t i = 0; i < best_x.size(); ++i) {
        out[i] = (best_x[i] / time_st[i]) * time_st[i];
    }
    return out;
}

Vec prey_distance(const Vec& dist_st) {
    Vec out(dist_st.size());
    for (std::size_t i = 0; i < dist_st.size(); ++i) {
        out[i] = dist_st[i] * 0.5;
    }
    return out;
}

double averaged_time(const Vec& time_st) {
    double sum = 0.0;
    for (double v : time_st) {
        sum += v;
    }
    return sum / static_cast<double>(time_st.size());
}

double jump_height(const Vec& time_st) {
    const double t = averaged_time(time_st) / 2.0;
    return kHalfGravity * t * t;
}

double a_coefficient(std::size_t it, std::size_t epochs, AVariant variant) {
    const double max_it = static_cast<double>(epochs);
    const double cur = static_cast<double>(it);
    if (variant == AVariant::printed) {
        return 2.0 * (cur - 1.0 / max_it);
    }
    return 2.0 * (1.0 - cur / max_it);
}

Vec exploit_move(const Vec& dist_fox_prey, double jump, double c1, double c2, double p) {
    const double c = p > 0.18 ? c1 : c2;
    Vec out(dist_fox_prey.size());
    for (std::size_t i = 0; i < dist_fox_prey.size(); ++i) {
        out[i] = dist_fox_prey[i] * jump * c;
    }
    return out;
}

Vec explore_move(const Vec& best_x, const Vec& rnd, double mint, double a) {
    if (best_x.size() != rnd.size()) {
        throw std::invalid_argument("explore_move: dimension mismatch");
    }
    Vec out(best_x.size());
    for (std::size_t i = 0; i < best_x.size(); ++i) {
        out[i] = best_x[i] * rnd[i] * mint * a;
    }
    return out;
}

State make_state(const BoundedProblem& problem, const OptimizerConfig& config,
                 const Options& options, RngStream& rng, std::vector<Vec>& population,
                 std::uint64_t& evaluations) {
    validate(problem);
    if (config.population == 0) {
        throw std::invalid_argument("fox: population must be >= 1");
    }

    State state;
    state.epochs = config.epochs;
    state.c1 = options.c1 ? *options.c1 : rng.uniform(0.0, 0.18);
    state.c2 = options.c2 ? *options.c2 : rng.uniform(0.19, 0.82);

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
          AVariant variant) {
    state.time_st = sample_travel_time(rng, problem.dim);
    state.sp_s.resize(problem.dim);
    for (std::size_t i = 0; i < problem.dim; ++i) {
        state.sp_s[i] = state.best_x[i] / state.time_st[i];
    }
    state.dist_st = sound_distance(state.best_x, state.time_st);
    state.dist_fox_prey = prey_distance(state.dist_st);
    state.jump = jump_height(state.time_st);
    state.a = a_coefficient(state.it, state.epochs, variant);
    state.mint = std::min(state.mint, averaged_time(state.time_st));

    for (Vec& agent : population) {
        const double r = rng.unit();
        Vec candidate;
        if (r >= 0.5) {
            ++counters.exploit;
            const double p = rng.unit();
            candidate = exploit_move(state.dist_fox_prey, state.jump, state.c1, state.c2, p);
        } else {
            ++counters.explore;
            const Vec rnd = uniform(rng, 0.0, 1.0, problem.dim);
            candidate = explore_move(state.best_x, rnd, state.mint, state.a);
        }
        agent = clamp(candidate, problem);
    }

    // Greedy elitist update after the whole population moved.
    for (const Vec& agent : population) {
        const double f = problem.objective(agent);
        ++evaluations;
        if (f < state.best_f) {
            state.best_f = f;
            state.best_x = agent;
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
    State state = make_state(problem, config, options, rng, population, trace.evaluations);

    trace.best_per_epoch.reserve(config.epochs);
    for (std::size_t it = 0; it < config.epochs; ++it) {
        step(state, population, problem, rng, trace.evaluations, trace.counters,
             options.a_variant);
        trace.best_per_epoch.push_back(state.best_f);
    }

    trace.final_best_x = state.best_x;
    trace.final_best_f = state.best_f;
    trace.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return trace;
}

} // namespace foxopt::fox
