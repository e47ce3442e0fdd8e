#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "foxopt/fox.hpp"
#include "foxopt/problem.hpp"

#include "json.hpp"

namespace foxopt::harness {

enum class Algorithm { fox, ifox };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

/// Names accepted by resolve_problem: benchmark tids ("CL1".."CL20"),
/// benchmark base names ("sphere", "rastrigin", ...), design problem codes
/// ("pvd", "wbp", ...), and the aliases "classical" / "rwp" which expand to
/// the full suites.
std::vector<std::string> expand_problem_names(const std::vector<std::string>& names);

/// transform: "" | "shift" | "rotate" | "shift-rotate". Transformed variants
/// are labeled "<tid>-s", "<tid>-r" or "<tid>-sr" and keep the optimum value
/// (shifts stay inside the box; rotations preserve the minimum value on these
/// symmetric landscapes).
BoundedProblem resolve_problem(const std::string& name, std::size_t dim_override,
                               const std::string& transform, std::uint64_t seed);

struct ExperimentConfig {
    std::vector<Algorithm> algorithms = {Algorithm::fox, Algorithm::ifox};
    std::vector<std::string> problems;
    std::size_t epochs = 500;
    std::size_t population = 30;
    std::size_t trials = 30;
    std::uint64_t seed = 1;
    std::size_t dim_override = 0; // 0 = per-problem default
    std::string transform;        // benchmark tids only
    std::filesystem::path output_dir;
    std::size_t threads = 0;    // 0 = hardware concurrency
    bool measure_time = true;   // false zeroes wall clocks for byte-stable output
    bool write_traces = true;
    fox::AVariant fox_a_variant = fox::AVariant::printed;
    bool ifox_strict_reeval = false;
};

/// Loads [run] section keys (problems, algorithms, epochs, population,
/// trials, seed, threads, out, dim, transform) into a config.
ExperimentConfig experiment_config_from_file(const std::string& path);

struct CellStats {
    std::string algorithm;
    std::string problem;
    double avg = 0.0;
    double stdev = 0.0;
    double best = 0.0;
    double worst = 0.0;
    double pt_seconds = 0.0;      // mean wall seconds per epoch
    double evaluations = 0.0;     // mean objective calls per trial
    double opposition_moves = 0.0; // mean per trial (ifox instrumentation)
    Vec mean_curve;               // mean best-so-far per epoch

    // Constrained problems only: infeasible answers are reported, not
    // rejected, so the violation picture rides along.
    std::optional<std::size_t> feasible_trials;
    Vec worst_violation; // elementwise max over trials, per constraint
};

struct ExperimentReport {
    std::size_t epochs = 0;
    std::size_t population = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<CellStats> cells;
    std::vector<std::vector<RunTrace>> traces; // parallel to cells
};

/// Runs the (algorithm x problem x trial) grid; trial i always uses seed
/// base_seed + i, so results do not depend on scheduling. When output_dir is
/// set, writes traces/<algorithm>_<problem>.csv, aggregates.csv and
/// report.json.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Long-format convergence data (algorithm, epoch, mean_best_f) for one
/// problem; reproduces the report's stored mean curves exactly.
void emit_convergence(const ExperimentReport& report, const std::string& problem,
                      std::ostream& out);
void emit_convergence_json(const nlohmann::json& report, const std::string& problem,
                           std::ostream& out);

nlohmann::json report_to_json(const ExperimentReport& report);

/// Rebuilds the score matrix (algorithms x problems on Avg) from a report.
struct ScoreRows {
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    std::vector<Vec> avg; // [algorithm][problem]
};
ScoreRows score_rows(const ExperimentReport& report);

} // namespace foxopt::harness
