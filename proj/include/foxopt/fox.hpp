#pragma once

#include <optional>
#include <vector>

#include "foxopt/problem.hpp"
#include "foxopt/rng.hpp"

namespace foxopt::fox {

/// Half the gravitational constant, 0.5 * 9.81.
inline constexpr double kHalfGravity = 4.905;

/// The printed schedule for the exploration coefficient grows with the epoch
/// index; `decreasing` is the conventional ramp 2*(1 - it/epochs).
enum class AVariant { printed, decreasing };

struct Options {
    AVariant a_variant = AVariant::printed;
    std::optional<double> c1; // drawn once per run from [0, 0.18] when unset
    std::optional<double> c2; // drawn once per run from [0.19, 0.82] when unset
};

/// Per-epoch algorithm state. best_x/best_f are the elitist memory; the
/// remaining fields are refreshed at the top of every epoch.
struct State {
    Vec best_x;
    double best_f = std::numeric_limits<double>::infinity();
    Vec time_st;        // sound travel time, uniform [0,1] per dimension
    Vec sp_s;           // modified sound speed best_x / time_st
    Vec dist_st;        // sp_s (.) time_st
    Vec dist_fox_prey;  // 0.5 * dist_st
    double jump = 0.0;
    double a = 0.0;
    double mint = std::numeric_limits<double>::infinity(); // running min of averaged time
    double c1 = 0.0;
    double c2 = 0.0;
    std::size_t it = 0;
    std::size_t epochs = 0;
};

/// Travel-time sample in [0,1]^dim; zero entries are redrawn so the sound
/// speed division stays finite.
Vec sample_travel_time(RngStream& rng, std::size_t dim);

/// Sound distance (best_x / time_st) (.) time_st, computed as written.
/// Algebraically equal to best_x wherever time_st is nonzero.
Vec sound_distance(const Vec& best_x, const Vec& time_st);

/// Fox-to-prey distance: half the sound distance.
Vec prey_distance(const Vec& dist_st);

/// Mean travel time across dimensions (the tt feeding the running minimum).
double averaged_time(const Vec& time_st);

/// Gravity-driven jump scale: kHalfGravity * t^2 with t = mean travel time / 2.
/// Shared verbatim with ifox.
double jump_height(const Vec& time_st);

double a_coefficient(std::size_t it, std::size_t epochs, AVariant variant);

/// Exploitation candidate (pre-clamp): dist_fox_prey * jump * (c1 if p > 0.18
/// else c2).
Vec exploit_move(const Vec& dist_fox_prey, double jump, double c1, double c2, double p);

/// Exploration candidate (pre-clamp): best_x (.) rnd * mint * a.
Vec explore_move(const Vec& best_x, const Vec& rnd, double mint, double a);

/// Initializes the state and the population (uniform in the box), evaluating
/// every agent once.
State make_state(const BoundedProblem& problem, const OptimizerConfig& config,
                 const Options& options, RngStream& rng, std::vector<Vec>& population,
                 std::uint64_t& evaluations);

/// Advances one epoch: refreshes per-epoch quantities, moves every agent
/// (50/50 exploit/explore), evaluates, then applies the greedy best update.
void step(State& state, std::vector<Vec>& population, const BoundedProblem& problem,
          RngStream& rng, std::uint64_t& evaluations, StepCounters& counters,
          AVariant variant = AVariant::printed);

RunTrace run(const BoundedProblem& problem, const OptimizerConfig& config,
             const Options& options = {});

} // namespace foxopt::fox
