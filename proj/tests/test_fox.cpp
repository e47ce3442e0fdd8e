#include <stdexcept>
#include <cmath>

#include "foxopt/fox.hpp"

#include "doctest.h"

using namespace foxopt;

namespace {

BoundedProblem sphere_problem(std::size_t dim, double bound = 5.0) {
    BoundedProblem p;
    p.name = "sphere";
    p.dim = dim;
    p.lower = Vec(dim, -bound);
    p.upper = Vec(dim, bound);
    p.objective = [](const Vec& x) {
        double s = 0.0;
        for (double v : x) {
            s += v * v;
        }
        return s;
    };
    p.known_optimum = 0.0;
    return p;
}

} // namespace

TEST_CASE("sound distance cancels the travel time") {
    CHECK(fox::sound_distance({2.0, 4.0}, {0.5, 0.25}) == Vec{2.0, 4.0});
    CHECK(fox::sound_distance({0.0, 0.0}, {0.3, 0.9}) == Vec{0.0, 0.0});
    CHECK(fox::sound_distance({1.0}, {1.0}) == Vec{1.0});
}

TEST_CASE("prey distance halves the sound distance") {
    CHECK(fox::prey_distance({2.0, 4.0}) == Vec{1.0, 2.0});
    CHECK(fox::prey_distance({0.0}) == Vec{0.0});
    CHECK(fox::prey_distance({-3.0}) == Vec{-1.5});
}

TEST_CASE("jump height from the averaged travel time") {
    CHECK(fox::jump_height({1.0, 1.0}) == 1.22625);
    CHECK(fox::jump_height({0.0, 0.0}) == 0.0);
    CHECK(fox::jump_height({0.2, 0.6}) == doctest::Approx(0.1962).epsilon(1e-12));
}

TEST_CASE("exploit move picks c1 or c2 on the 0.18 threshold") {
    CHECK(fox::exploit_move({1.0, 2.0}, 1.0, 0.1, 0.5, 0.5) == Vec{0.1, 0.2});
    CHECK(fox::exploit_move({3.0, -4.0}, 0.0, 0.1, 0.5, 0.9) == Vec{0.0, -0.0});
    CHECK(fox::exploit_move({1.0}, 2.0, 0.1, 0.5, 0.1) == Vec{1.0});
}

TEST_CASE("explore move scales the best position elementwise") {
    CHECK(fox::explore_move({0.0, 0.0}, {0.4, 0.7}, 0.5, 1.3) == Vec{0.0, 0.0});
    CHECK(fox::explore_move({1.0, 2.0}, {0.4, 0.7}, 0.0, 1.3) == Vec{0.0, 0.0});
    CHECK(fox::explore_move({1.0, 1.0}, {0.5, 2.0}, 1.0, 1.0) == Vec{0.5, 2.0});
    CHECK_THROWS_AS(fox::explore_move({1.0}, {0.5, 2.0}, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("a coefficient: printed form and decreasing ramp") {
    CHECK(fox::a_coefficient(0, 500, fox::AVariant::printed) ==
          doctest::Approx(-0.004).epsilon(1e-12));
    CHECK(fox::a_coefficient(250, 500, fox::AVariant::printed) ==
          doctest::Approx(2.0 * (250.0 - 1.0 / 500.0)).epsilon(1e-12));
    CHECK(fox::a_coefficient(0, 500, fox::AVariant::decreasing) == 2.0);
    CHECK(fox::a_coefficient(500, 500, fox::AVariant::decreasing) == 0.0);
    CHECK(fox::a_coefficient(250, 500, fox::AVariant::decreasing) == 1.0);
}

TEST_CASE("travel time sampling stays in [0,1] without zeros") {
    RngStream rng(11);
    for (int i = 0; i < 100; ++i) {
        const Vec t = fox::sample_travel_time(rng, 8);
        for (double v : t) {
            REQUIRE(v > 0.0);
            REQUIRE(v <= 1.0);
        }
    }
}

TEST_CASE("single-agent run never worsens the initial best") {
    const BoundedProblem p = sphere_problem(3);
    OptimizerConfig config;
    config.epochs = 500;
    config.population = 1;
    config.seed = 42;
    const RunTrace trace = fox::run(p, config);
    REQUIRE(trace.best_per_epoch.size() == 500);
    CHECK(trace.final_best_f <= trace.best_per_epoch.front());
    CHECK(trace.final_best_f == trace.best_per_epoch.back());
}

TEST_CASE("zero-epoch run reports the initial best and an empty curve") {
    const BoundedProblem p = sphere_problem(2);
    OptimizerConfig config;
    config.epochs = 0;
    config.population = 5;
    config.seed = 9;
    const RunTrace trace = fox::run(p, config);
    CHECK(trace.best_per_epoch.empty());
    CHECK(trace.evaluations == 5);
    CHECK(std::isfinite(trace.final_best_f));
}

TEST_CASE("sphere dim 2: mean final best over 30 trials under 1e-2") {
    const BoundedProblem p = sphere_problem(2, 100.0);
    double mean = 0.0;
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        OptimizerConfig config;
        config.seed = 1 + trial;
        mean += fox::run(p, config).final_best_f;
    }
    mean /= 30.0;
    CHECK(mean < 1e-2);
}

TEST_CASE("identical seeds give bit-identical traces") {
    const BoundedProblem p = sphere_problem(4);
    OptimizerConfig config;
    config.epochs = 50;
    config.seed = 1234;
    const RunTrace a = fox::run(p, config);
    const RunTrace b = fox::run(p, config);
    CHECK(a.best_per_epoch == b.best_per_epoch);
    CHECK(a.final_best_x == b.final_best_x);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("exploit/explore split is statically 50/50") {
    const BoundedProblem p = sphere_problem(2);
    OptimizerConfig config;
    config.epochs = 1000;
    config.population = 100;
    config.seed = 7;
    const RunTrace trace = fox::run(p, config);
    const double steps = static_cast<double>(trace.counters.exploit + trace.counters.explore);
    REQUIRE(steps == 100000.0);
    const double fraction = static_cast<double>(trace.counters.exploit) / steps;
    CHECK(fraction >= 0.49);
    CHECK(fraction <= 0.51);
}

TEST_CASE("mint never increases and positions stay inside the box") {
    const BoundedProblem p = sphere_problem(3);
    OptimizerConfig config;
    config.epochs = 200;
    config.population = 10;
    config.seed = 21;

    RngStream rng(config.seed);
    std::vector<Vec> population;
    std::uint64_t evaluations = 0;
    StepCounters counters;
    fox::State state = fox::make_state(p, config, {}, rng, population, evaluations);

    double previous_mint = state.mint;
    double previous_best = state.best_f;
    for (std::size_t it = 0; it < config.epochs; ++it) {
        fox::step(state, population, p, rng, evaluations, counters);
        CHECK(state.mint <= previous_mint);
        CHECK(state.best_f <= previous_best);
        previous_mint = state.mint;
        previous_best = state.best_f;
        for (const Vec& agent : population) {
            REQUIRE(in_bounds(agent, p));
        }
    }
}

TEST_CASE("explicit c1/c2 are honored") {
    const BoundedProblem p = sphere_problem(2);
    OptimizerConfig config;
    config.epochs = 10;
    config.seed = 5;

    fox::Options options;
    options.c1 = 0.05;
    options.c2 = 0.4;

    RngStream rng(config.seed);
    std::vector<Vec> population;
    std::uint64_t evaluations = 0;
    const fox::State state = fox::make_state(p, config, options, rng, population, evaluations);
    CHECK(state.c1 == 0.05);
    CHECK(state.c2 == 0.4);
}

TEST_CASE("sampled c1/c2 fall in their documented ranges") {
    const BoundedProblem p = sphere_problem(2);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        OptimizerConfig config;
        config.seed = seed;
        RngStream rng(seed);
        std::vector<Vec> population;
        std::uint64_t evaluations = 0;
        const fox::State state = fox::make_state(p, config, {}, rng, population, evaluations);
        CHECK(state.c1 >= 0.0);
        CHECK(state.c1 < 0.18);
        CHECK(state.c2 >= 0.19);
        CHECK(state.c2 < 0.82);
    }
}
