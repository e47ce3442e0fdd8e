#include "foxopt/benchmarks/registry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace foxopt::bench {

namespace {

Vec constant_vec(std::size_t n, double v) {
    return Vec(n, v);
}

Vec dixon_price_minimizer(std::size_t n) {
    // x_i = 2^(-(2^i - 2) / 2^i), 1-based i.
    Vec x(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double p = std::pow(2.0, static_cast<double>(i));
        x[i - 1] = std::pow(2.0, -(p - 2.0) / p);
    }
    return x;
}

std::vector<BenchmarkSpec> build_registry() {
    constexpr std::size_t d = 30;
    std::vector<BenchmarkSpec> specs;
    specs.reserve(20);

    auto add = [&specs](std::string tid, std::string base, std::size_t dim, double lo, double hi,
                        double fopt, std::optional<Vec> xopt, Modality modality,
                        std::function<double(const Vec&)> fn) {
        specs.push_back(BenchmarkSpec{std::move(tid), std::move(base), dim, lo, hi, fopt,
                                      std::move(xopt), modality, std::move(fn)});
    };

    // unimodal
    add("CL1", "sphere", d, -100, 100, 0.0, constant_vec(d, 0.0), Modality::unimodal, sphere);
    add("CL2", "rosenbrock", d, -30, 30, 0.0, constant_vec(d, 1.0), Modality::unimodal,
        rosenbrock);
    add("CL3", "schwefel_2_22", d, -10, 10, 0.0, constant_vec(d, 0.0), Modality::unimodal,
        schwefel_222);
    add("CL4", "schwefel_1_2", d, -100, 100, 0.0, constant_vec(d, 0.0), Modality::unimodal,
        schwefel_12);
    add("CL5", "schwefel_2_21", d, -100, 100, 0.0, constant_vec(d, 0.0), Modality::unimodal,
        schwefel_221);
    add("CL6", "step", d, -100, 100, 0.0, constant_vec(d, 0.0), Modality::unimodal,
        step_function);
    add("CL7", "quartic_noise", d, -1.28, 1.28, 0.0, std::nullopt, Modality::unimodal,
        [](const Vec& x) { return quartic(x, 0); });
    add("CL8", "sum_of_squares", d, -10, 10, 0.0, constant_vec(d, 0.0), Modality::unimodal,
        sum_of_squares);
    add("CL9", "zakharov", d, -10, 10, 0.0, constant_vec(d, 0.0), Modality::unimodal, zakharov);
    add("CL10", "dixon_price", d, -10, 10, 0.0, dixon_price_minimizer(d), Modality::unimodal,
        dixon_price);

    // multimodal
    add("CL11", "rastrigin", d, -5.12, 5.12, 0.0, constant_vec(d, 0.0), Modality::multimodal,
        rastrigin);
    add("CL12", "ackley", d, -32.768, 32.768, 0.0, constant_vec(d, 0.0), Modality::multimodal,
        ackley);
    add("CL13", "griewank", d, -600, 600, 0.0, constant_vec(d, 0.0), Modality::multimodal,
        griewank);
    add("CL14", "schwefel_2_26", d, -500, 500, 0.0, constant_vec(d, kSchwefel226Minimizer),
        Modality::multimodal, schwefel_226);
    add("CL15", "levy", d, -10, 10, 0.0, constant_vec(d, 1.0), Modality::multimodal, levy);
    add("CL16", "michalewicz", 10, 0.0, std::numbers::pi, -9.66015, std::nullopt,
        Modality::multimodal, michalewicz);
    add("CL17", "penalized_1", d, -50, 50, 0.0, constant_vec(d, -1.0), Modality::multimodal,
        penalized1);
    add("CL18", "penalized_2", d, -50, 50, 0.0, constant_vec(d, 1.0), Modality::multimodal,
        penalized2);
    add("CL19", "alpine", d, -10, 10, 0.0, constant_vec(d, 0.0), Modality::multimodal, alpine);
    add("CL20", "salomon", d, -100, 100, 0.0, constant_vec(d, 0.0), Modality::multimodal,
        salomon);
    return specs;
}

std::optional<double> michalewicz_optimum(std::size_t dim) {
    // Literature values; only quoted at the dimensions they were computed for.
    switch (dim) {
        case 2: return -1.8013;
        case 5: return -4.687658;
        case 10: return -9.66015;
        default: return std::nullopt;
    }
}

} // namespace

const std::vector<BenchmarkSpec>& registry() {
    static const std::vector<BenchmarkSpec> specs = build_registry();
    return specs;
}

const BenchmarkSpec& find(std::string_view tid) {
    for (const BenchmarkSpec& spec : registry()) {
        if (spec.tid == tid) {
            return spec;
        }
    }
    throw std::invalid_argument("unknown benchmark tid: " + std::string(tid));
}

double evaluate(std::string_view tid, const Vec& x) {
    const BenchmarkSpec& spec = find(tid);
    if (x.size() != spec.dim) {
        throw std::invalid_argument("evaluate(" + spec.tid + "): dimension mismatch");
    }
    return spec.fn(x);
}

BoundedProblem make_problem(std::string_view tid, std::size_t dim, std::uint64_t noise_seed) {
    const BenchmarkSpec& spec = find(tid);
    const std::size_t n = dim == 0 ? spec.dim : dim;

    BoundedProblem problem;
    problem.name = spec.tid;
    problem.dim = n;
    problem.lower = constant_vec(n, spec.lower);
    problem.upper = constant_vec(n, spec.upper);
    if (spec.base == "quartic_noise") {
        problem.objective = [noise_seed](const Vec& x) { return quartic(x, noise_seed); };
    } else {
        problem.objective = spec.fn;
    }
    if (spec.base == "michalewicz") {
        problem.known_optimum = michalewicz_optimum(n);
    } else {
        problem.known_optimum = spec.optimum_f; // dimension-independent minimum value
    }
    return problem;
}

nlohmann::json catalog_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const BenchmarkSpec& spec : registry()) {
        nlohmann::json entry;
        entry["tid"] = spec.tid;
        entry["base"] = spec.base;
        entry["dim"] = spec.dim;
        entry["lower"] = spec.lower;
        entry["upper"] = spec.upper;
        entry["optimum_f"] = spec.optimum_f;
        entry["has_optimum_x"] = spec.optimum_x.has_value();
        entry["modality"] = spec.modality == Modality::unimodal ? "unimodal" : "multimodal";
        out.push_back(entry);
    }
    return out;
}

} // namespace foxopt::bench
