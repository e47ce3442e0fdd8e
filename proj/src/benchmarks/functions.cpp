#include "foxopt/benchmarks/functions.hpp"

#include <cmath>
#include <cstring>
#include <numbers>

namespace foxopt::bench {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Penalty term shared by the two penalized functions.
double boundary_penalty(const Vec& x, double a, double k, double m) {
    double sum = 0.0;
    for (double v : x) {
        if (v > a) {
            sum += k * std::pow(v - a, m);
        } else if (v < -a) {
            sum += k * std::pow(-v - a, m);
        }
    }
    return sum;
}

} // namespace

double sphere(const Vec& x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

double rosenbrock(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double schwefel_222(const Vec& x) {
    double sum = 0.0;
    double prod = 1.0;
    for (double v : x) {
        sum += std::fabs(v);
        prod *= std::fabs(v);
    }
    return sum + prod;
}

double schwefel_12(const Vec& x) {
    double s = 0.0;
    double prefix = 0.0;
    for (double v : x) {
        prefix += v;
        s += prefix * prefix;
    }
    return s;
}

double schwefel_221(const Vec& x) {
    double m = 0.0;
    for (double v : x) {
        m = std::max(m, std::fabs(v));
    }
    return m;
}

double step_function(const Vec& x) {
    double s = 0.0;
    for (double v : x) {
        const double t = std::floor(v + 0.5);
        s += t * t;
    }
    return s;
}

double quartic(const Vec& x, std::uint64_t noise_seed) {
    double s = 0.0;
    std::uint64_t h = noise_seed;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += static_cast<double>(i + 1) * x[i] * x[i] * x[i] * x[i];
        std::uint64_t bits;
        std::memcpy(&bits, &x[i], sizeof(bits));
        h = splitmix64(h ^ bits);
    }
    const double noise = static_cast<double>(h >> 11) * 0x1.0p-53; // [0, 1)
    return s + noise;
}

double sum_of_squares(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += static_cast<double>(i + 1) * x[i] * x[i];
    }
    return s;
}

double zakharov(const Vec& x) {
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s1 += x[i] * x[i];
        s2 += 0.5 * static_cast<double>(i + 1) * x[i];
    }
    return s1 + s2 * s2 + s2 * s2 * s2 * s2;
}

double dixon_price(const Vec& x) {
    double s = (x[0] - 1.0) * (x[0] - 1.0);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double t = 2.0 * x[i] * x[i] - x[i - 1];
        s += static_cast<double>(i + 1) * t * t;
    }
    return s;
}

double rastrigin(const Vec& x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) {
        s += v * v - 10.0 * std::cos(2.0 * kPi * v);
    }
    return s;
}

double ackley(const Vec& x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    const double e = std::exp(1.0);
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + e;
}

double griewank(const Vec& x) {
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i] / 4000.0;
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum - prod + 1.0;
}

double schwefel_226(const Vec& x) {
    // Offset derived from the embedded minimizer so the minimum value is
    // exactly zero.
    static const double offset =
        kSchwefel226Minimizer * std::sin(std::sqrt(kSchwefel226Minimizer));
    double s = 0.0;
    for (double v : x) {
        s += offset - v * std::sin(std::sqrt(std::fabs(v)));
    }
    return s;
}

double levy(const Vec& x) {
    const std::size_t n = x.size();
    auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
    const double s0 = std::sin(kPi * w(0));
    double s = s0 * s0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double wi = w(i);
        const double sp = std::sin(kPi * wi + 1.0);
        s += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * sp * sp);
    }
    const double wn = w(n - 1);
    const double sn = std::sin(2.0 * kPi * wn);
    s += (wn - 1.0) * (wn - 1.0) * (1.0 + sn * sn);
    return s;
}

double michalewicz(const Vec& x) {
    constexpr double m = 10.0;
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / kPi);
        s -= std::sin(x[i]) * std::pow(t * t, m);
    }
    return s;
}

double penalized1(const Vec& x) {
    const std::size_t n = x.size();
    auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    const double s0 = std::sin(kPi * y(0));
    double s = 10.0 * s0 * s0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double yi = y(i);
        const double sp = std::sin(kPi * y(i + 1));
        s += (yi - 1.0) * (yi - 1.0) * (1.0 + 10.0 * sp * sp);
    }
    const double yn = y(n - 1);
    s += (yn - 1.0) * (yn - 1.0);
    s *= kPi / static_cast<double>(n);
    return s + boundary_penalty(x, 10.0, 100.0, 4.0);
}

double penalized2(const Vec& x) {
    const std::size_t n = x.size();
    const double s0 = std::sin(3.0 * kPi * x[0]);
    double s = s0 * s0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double sp = std::sin(3.0 * kPi * x[i + 1]);
        s += (x[i] - 1.0) * (x[i] - 1.0) * (1.0 + sp * sp);
    }
    const double sn = std::sin(2.0 * kPi * x[n - 1]);
    s += (x[n - 1] - 1.0) * (x[n - 1] - 1.0) * (1.0 + sn * sn);
    return 0.1 * s + boundary_penalty(x, 5.0, 100.0, 4.0);
}

double alpine(const Vec& x) {
    double s = 0.0;
    for (double v : x) {
        s += std::fabs(v * std::sin(v) + 0.1 * v);
    }
    return s;
}

double salomon(const Vec& x) {
    const double r = std::sqrt(sphere(x));
    return 1.0 - std::cos(2.0 * kPi * r) + 0.1 * r;
}

} // namespace foxopt::bench
