#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "foxopt/harness/experiment.hpp"

namespace foxopt::harness {

struct ScalabilityConfig {
    std::string problem = "CL11"; // rastrigin
    std::string transform = "shift"; // off-origin optimum, the CEC-like setup
    Algorithm algorithm = Algorithm::ifox;
    std::vector<std::size_t> dims = {10, 30, 50, 100};
    std::vector<std::size_t> epoch_grid = {50, 100, 250, 500, 1000};
    std::size_t population = 30;
    std::size_t trials = 30;
    std::uint64_t seed = 1;
    std::filesystem::path output_file; // empty = don't write
};

struct ScalabilityRow {
    std::size_t dim = 0;
    std::size_t epochs = 0;
    double runtime_s = 0.0;               // mean wall seconds per trial
    std::optional<double> rel_error;      // empty when no known optimum
};

/// Runs the (dim x epochs) grid, trials per cell, sequentially (stable
/// timing). rel_error is |f_found - f_opt| / max(1, |f_opt|) averaged over
/// trials. Throws std::invalid_argument on an empty or zero-valued grid.
std::vector<ScalabilityRow> run_scalability(const ScalabilityConfig& config);

void write_scalability_csv(const std::vector<ScalabilityRow>& rows,
                           const std::filesystem::path& path);

} // namespace foxopt::harness
