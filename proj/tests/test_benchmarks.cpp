#include <stdexcept>
#include <cmath>
#include <set>

#include "foxopt/benchmarks/registry.hpp"
#include "foxopt/benchmarks/transforms.hpp"

#include "doctest.h"

using namespace foxopt;
using namespace foxopt::bench;

TEST_CASE("known minima evaluate to zero") {
    CHECK(evaluate("CL1", Vec(30, 0.0)) == 0.0);
    CHECK(evaluate("CL2", Vec(30, 1.0)) == 0.0);
    CHECK(evaluate("CL11", Vec(30, 0.0)) == 0.0);
}

TEST_CASE("registry: ten unimodal, ten multimodal, unique tids") {
    const auto& specs = registry();
    REQUIRE(specs.size() == 20);

    std::size_t unimodal = 0;
    std::set<std::string> tids;
    for (const auto& spec : specs) {
        tids.insert(spec.tid);
        if (spec.modality == Modality::unimodal) {
            ++unimodal;
        }
    }
    CHECK(unimodal == 10);
    CHECK(tids.size() == 20);
}

TEST_CASE("registry: every provided minimizer matches its minimum value") {
    for (const auto& spec : registry()) {
        if (!spec.optimum_x) {
            continue;
        }
        INFO(spec.tid);
        const double f = spec.fn(*spec.optimum_x);
        CHECK(std::fabs(f - spec.optimum_f) < 1e-12);
    }
}

TEST_CASE("unknown tid and dimension mismatch are rejected") {
    CHECK_THROWS_AS(evaluate("CL99", Vec(30, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(evaluate("CL1", Vec(3, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(find("nope"), std::invalid_argument);
}

TEST_CASE("separable functions decompose coordinate-wise") {
    RngStream rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec x = uniform(rng, -5.0, 5.0, 6);
        double sphere_parts = 0.0;
        double rastrigin_parts = 0.0;
        for (double v : x) {
            sphere_parts += sphere({v});
            rastrigin_parts += rastrigin({v});
        }
        CHECK(sphere(x) == doctest::Approx(sphere_parts).epsilon(1e-12));
        CHECK(rastrigin(x) == doctest::Approx(rastrigin_parts).epsilon(1e-9));
    }
}

TEST_CASE("quartic noise is a deterministic function of x and seed") {
    const Vec x{0.3, -0.7, 1.1};
    CHECK(quartic(x, 5) == quartic(x, 5));
    CHECK(quartic(x, 5) != quartic(x, 6));
    const double noiseless = 1.0 * std::pow(0.3, 4) + 2.0 * std::pow(-0.7, 4) +
                             3.0 * std::pow(1.1, 4);
    const double noise = quartic(x, 5) - noiseless;
    CHECK(noise >= 0.0);
    CHECK(noise < 1.0);
}

TEST_CASE("identity transform leaves values unchanged") {
    const auto spec = make_transform({}, {});
    RngStream rng(9);
    for (int i = 0; i < 50; ++i) {
        const Vec x = uniform(rng, -3.0, 3.0, 4);
        CHECK(apply_transform(spec, sphere, x) == sphere(x));
    }
}

TEST_CASE("shift moves the minimizer by exactly the shift vector") {
    // Brute-force dim-2 grid oracle on sphere and rastrigin.
    const Vec shift{0.75, -0.5};
    for (auto base : {&sphere, &rastrigin}) {
        const auto spec = make_transform(shift, {});
        double best_f = std::numeric_limits<double>::infinity();
        Vec best_x(2);
        const int steps = 160; // grid pitch 0.05 over [-4, 4]
        for (int i = 0; i <= steps; ++i) {
            for (int j = 0; j <= steps; ++j) {
                const Vec x{-4.0 + 8.0 * i / steps, -4.0 + 8.0 * j / steps};
                const double f = apply_transform(spec, *base, x);
                if (f < best_f) {
                    best_f = f;
                    best_x = x;
                }
            }
        }
        // Original minimizer is the origin; the grid contains optimum + shift
        // exactly (0.75 and -0.5 are multiples of the 0.05 pitch).
        CHECK(std::fabs(best_x[0] - shift[0]) < 1e-9);
        CHECK(std::fabs(best_x[1] - shift[1]) < 1e-9);
    }
}

TEST_CASE("rotation preserves sphere values everywhere") {
    RngStream rng(31);
    const Matrix r = random_rotation(rng, 5);
    const auto spec = make_transform({}, r);
    for (int i = 0; i < 100; ++i) {
        const Vec x = uniform(rng, -10.0, 10.0, 5);
        CHECK(apply_transform(spec, sphere, x) == doctest::Approx(sphere(x)).epsilon(1e-9));
    }
}

TEST_CASE("non-orthogonal rotations are rejected at construction") {
    Matrix skew{{1.0, 0.5}, {0.0, 1.0}};
    CHECK_THROWS_AS(make_transform({}, skew), std::invalid_argument);
}

TEST_CASE("composite validation and evaluation") {
    CHECK_THROWS_AS(make_composite({0.5, 0.6}, {{}, {}}, {sphere, rastrigin}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_composite({-0.1, 1.1}, {{}, {}}, {sphere, rastrigin}),
                    std::invalid_argument);

    const auto composite = make_composite({0.25, 0.75}, {{}, {}}, {sphere, rastrigin});
    const Vec x{0.4, -1.2};
    CHECK(evaluate_composite(composite, x) ==
          doctest::Approx(0.25 * sphere(x) + 0.75 * rastrigin(x)).epsilon(1e-12));
}

TEST_CASE("random rotations satisfy the orthogonality tolerance") {
    RngStream rng(14);
    for (std::size_t dim : {2, 5, 12}) {
        const Matrix r = random_rotation(rng, dim);
        CHECK_NOTHROW(make_transform({}, r));
    }
}

TEST_CASE("make_problem honors dimension overrides and optima") {
    const BoundedProblem p = make_problem("CL11", 10);
    CHECK(p.dim == 10);
    CHECK(p.lower == Vec(10, -5.12));
    REQUIRE(p.known_optimum.has_value());
    CHECK(*p.known_optimum == 0.0);

    // Dimension-dependent optimum only quoted where known.
    CHECK(make_problem("CL16", 10).known_optimum.has_value());
    CHECK_FALSE(make_problem("CL16", 7).known_optimum.has_value());
}

TEST_CASE("catalog json lists all twenty functions") {
    const auto json = catalog_json();
    CHECK(json.size() == 20);
    CHECK(json[0]["tid"] == "CL1");
}
