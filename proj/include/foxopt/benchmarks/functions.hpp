#pragma once

#include <cstdint>

#include "foxopt/rng.hpp"

namespace foxopt::bench {

// Classical closed forms. All are minimization, dimension-generic, and pure;
// quartic takes an explicit noise seed so its additive noise stays a
// deterministic function of (x, seed).

// unimodal
double sphere(const Vec& x);
double rosenbrock(const Vec& x);
double schwefel_222(const Vec& x);
double schwefel_12(const Vec& x);
double schwefel_221(const Vec& x);
double step_function(const Vec& x);
double quartic(const Vec& x, std::uint64_t noise_seed);
double sum_of_squares(const Vec& x);
double zakharov(const Vec& x);
double dixon_price(const Vec& x);

// multimodal
double rastrigin(const Vec& x);
double ackley(const Vec& x);
double griewank(const Vec& x);
double schwefel_226(const Vec& x);
double levy(const Vec& x);
double michalewicz(const Vec& x);
double penalized1(const Vec& x);
double penalized2(const Vec& x);
double alpine(const Vec& x);
double salomon(const Vec& x);

/// Coordinate of the schwefel_226 minimizer (every dimension).
inline constexpr double kSchwefel226Minimizer = 420.96874635998199;

} // namespace foxopt::bench
