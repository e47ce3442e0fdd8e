#include "foxopt/harness/scalability.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "foxopt/fox.hpp"
#include "foxopt/harness/csv.hpp"
#include "foxopt/ifox.hpp"

namespace foxopt::harness {

std::vector<ScalabilityRow> run_scalability(const ScalabilityConfig& config) {
    if (config.dims.empty() || config.epoch_grid.empty()) {
        throw std::invalid_argument("scalability: empty grid");
    }
    for (std::size_t d : config.dims) {
        if (d == 0) {
            throw std::invalid_argument("scalability: dim 0 rejected");
        }
    }
    for (std::size_t e : config.epoch_grid) {
        if (e == 0) {
            throw std::invalid_argument("scalability: epochs 0 rejected");
        }
    }
    if (config.trials == 0) {
        throw std::invalid_argument("scalability: trials must be >= 1");
    }

    std::vector<ScalabilityRow> rows;
    for (std::size_t dim : config.dims) {
        const BoundedProblem problem =
            resolve_problem(config.problem, dim, config.transform, config.seed);

        std::vector<ScalabilityRow> dim_rows(config.epoch_grid.size());
        Vec runtime(config.epoch_grid.size(), 0.0);
        Vec err(config.epoch_grid.size(), 0.0);

        // Untimed warm-up, then trials interleaved across the epoch budgets
        // so clock-frequency drift hits every cell alike.
        {
            OptimizerConfig warm;
            warm.epochs = config.epoch_grid.front();
            warm.population = config.population;
            warm.seed = config.seed;
            if (config.algorithm == Algorithm::fox) {
                fox::run(problem, warm);
            } else {
                ifox::run(problem, warm);
            }
        }
        for (std::size_t trial = 0; trial < config.trials; ++trial) {
            for (std::size_t cell = 0; cell < config.epoch_grid.size(); ++cell) {
                OptimizerConfig run_config;
                run_config.epochs = config.epoch_grid[cell];
                run_config.population = config.population;
                run_config.seed = config.seed + trial;
                const RunTrace trace = config.algorithm == Algorithm::fox
                                           ? fox::run(problem, run_config)
                                           : ifox::run(problem, run_config);
                runtime[cell] += trace.wall_seconds;
                if (problem.known_optimum) {
                    const double fopt = *problem.known_optimum;
                    err[cell] +=
                        std::fabs(trace.final_best_f - fopt) / std::max(1.0, std::fabs(fopt));
                }
            }
        }

        for (std::size_t cell = 0; cell < config.epoch_grid.size(); ++cell) {
            ScalabilityRow row;
            row.dim = dim;
            row.epochs = config.epoch_grid[cell];
            row.runtime_s = runtime[cell] / static_cast<double>(config.trials);
            if (problem.known_optimum) {
                row.rel_error = err[cell] / static_cast<double>(config.trials);
            }
            rows.push_back(row);
        }
    }

    if (!config.output_file.empty()) {
        write_scalability_csv(rows, config.output_file);
    }
    return rows;
}

void write_scalability_csv(const std::vector<ScalabilityRow>& rows,
                           const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "dim,epochs,runtime_s,rel_error\n";
    for (const ScalabilityRow& row : rows) {
        out << row.dim << ',' << row.epochs << ',' << format_double(row.runtime_s) << ',';
        if (row.rel_error) {
            out << format_double(*row.rel_error);
        } else {
            out << "na";
        }
        out << '\n';
    }
}

} // namespace foxopt::harness
