#include "foxopt/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace foxopt {

double RngStream::uniform(double lo, double hi) {
    double v = lo + (hi - lo) * unit();
    // Keep the half-open contract even when rounding lands on hi.
    if (v >= hi && hi > lo) {
        v = std::nextafter(hi, lo);
    }
    return v;
}

double RngStream::normal() {
    const double u1 = 1.0 - unit(); // (0, 1], keeps the log finite
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec uniform(RngStream& rng, double lo, double hi, std::size_t n) {
    if (lo > hi) {
        throw std::invalid_argument("uniform: lo > hi");
    }
    if (n == 0) {
        throw std::invalid_argument("uniform: n == 0");
    }
    Vec out(n);
    for (double& v : out) {
        v = rng.uniform(lo, hi);
    }
    return out;
}

namespace {

// Mantegna scale for stability index 1.5:
// sigma_u = [Gamma(1+b) sin(pi b/2) / (Gamma((1+b)/2) b 2^((b-1)/2))]^(1/b)
constexpr double kLevyIndex = 1.5;

double mantegna_sigma() {
    const double b = kLevyIndex;
    const double num = std::tgamma(1.0 + b) * std::sin(std::numbers::pi * b / 2.0);
    const double den = std::tgamma((1.0 + b) / 2.0) * b * std::pow(2.0, (b - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / b);
}

} // namespace

Vec levy_flight(RngStream& rng, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("levy_flight: n == 0");
    }
    static const double sigma = mantegna_sigma();
    Vec out(n);
    for (double& step : out) {
        do {
            const double u = rng.normal() * sigma;
            const double v = rng.normal();
            step = u / std::pow(std::fabs(v), 1.0 / kLevyIndex);
        } while (!std::isfinite(step)); // v == 0 exactly is possible, if unlikely
    }
    return out;
}

} // namespace foxopt
