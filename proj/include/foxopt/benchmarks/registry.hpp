#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foxopt/benchmarks/functions.hpp"
#include "foxopt/problem.hpp"

#include "json.hpp"

namespace foxopt::bench {

enum class Modality { unimodal, multimodal };

struct BenchmarkSpec {
    std::string tid;  // CL1..CL20
    std::string base; // descriptive function name
    std::size_t dim;  // default dimension
    double lower;     // box bound, same for every coordinate
    double upper;
    double optimum_f;
    std::optional<Vec> optimum_x; // at the default dimension, when known in closed form
    Modality modality;
    std::function<double(const Vec&)> fn;
};

/// The twenty classical functions (CL1-CL10 unimodal, CL11-CL20 multimodal).
const std::vector<BenchmarkSpec>& registry();

/// Throws std::invalid_argument for an unknown tid.
const BenchmarkSpec& find(std::string_view tid);

/// Evaluates tid at x; throws on unknown tid or length != default dim.
double evaluate(std::string_view tid, const Vec& x);

/// Builds a BoundedProblem for a tid at an arbitrary dimension (0 = default).
/// noise_seed feeds CL7's additive noise. Dimension-dependent optima are only
/// reported at dimensions where they are known.
BoundedProblem make_problem(std::string_view tid, std::size_t dim = 0,
                            std::uint64_t noise_seed = 0);

/// Machine-readable catalog (tid, base, dim, bounds, optimum, modality).
nlohmann::json catalog_json();

} // namespace foxopt::bench
