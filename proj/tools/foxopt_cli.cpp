// Command-line experiment runner: seeded optimizer grids, scalability sweeps,
// nonparametric comparison reports and convergence-curve extraction.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "foxopt/benchmarks/registry.hpp"
#include "foxopt/engineering/constrained.hpp"
#include "foxopt/harness/csv.hpp"
#include "foxopt/harness/experiment.hpp"
#include "foxopt/harness/scalability.hpp"
#include "foxopt/stats/stats.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using namespace foxopt;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty()) {
                items.push_back(current);
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        items.push_back(current);
    }
    return items;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (const std::string& item : split_list(text)) {
        out.push_back(std::stoull(item));
    }
    return out;
}

int cmd_run(const std::string& config_file, const std::string& problems,
            const std::string& algorithms, long long epochs, long long population,
            long long trials, long long seed, long long threads, long long dim,
            const std::string& transform, const std::string& fox_a_variant,
            bool strict_reeval, const std::string& out_dir, bool no_timing) {
    harness::ExperimentConfig config;
    if (!config_file.empty()) {
        config = harness::experiment_config_from_file(config_file);
    }
    if (!problems.empty()) {
        config.problems = split_list(problems);
    }
    if (!algorithms.empty()) {
        config.algorithms.clear();
        for (const std::string& name : split_list(algorithms)) {
            config.algorithms.push_back(harness::parse_algorithm(name));
        }
    }
    if (epochs >= 0) {
        config.epochs = static_cast<std::size_t>(epochs);
    }
    if (population >= 0) {
        config.population = static_cast<std::size_t>(population);
    }
    if (trials >= 0) {
        config.trials = static_cast<std::size_t>(trials);
    }
    if (seed >= 0) {
        config.seed = static_cast<std::uint64_t>(seed);
    }
    if (threads >= 0) {
        config.threads = static_cast<std::size_t>(threads);
    }
    if (dim >= 0) {
        config.dim_override = static_cast<std::size_t>(dim);
    }
    if (!transform.empty()) {
        config.transform = transform;
    }
    if (!fox_a_variant.empty()) {
        if (fox_a_variant == "printed") {
            config.fox_a_variant = foxopt::fox::AVariant::printed;
        } else if (fox_a_variant == "decreasing") {
            config.fox_a_variant = foxopt::fox::AVariant::decreasing;
        } else {
            throw std::invalid_argument("--fox-a-variant must be printed or decreasing");
        }
    }
    if (strict_reeval) {
        config.ifox_strict_reeval = true;
    }
    if (!out_dir.empty()) {
        config.output_dir = out_dir;
    }
    config.measure_time = !no_timing;

    const harness::ExperimentReport report = harness::run_experiment(config);
    for (const harness::CellStats& cell : report.cells) {
        std::cout << cell.algorithm << " on " << cell.problem << ": avg=" << cell.avg
                  << " std=" << cell.stdev << " best=" << cell.best << " worst=" << cell.worst
                  << '\n';
    }
    return 0;
}

int cmd_scalability(const std::string& problem, const std::string& algorithm,
                    const std::string& dims, const std::string& epoch_grid, long long population,
                    long long trials, long long seed, const std::string& transform,
                    const std::string& out_file) {
    harness::ScalabilityConfig config;
    if (!problem.empty()) {
        config.problem = problem;
    }
    if (!transform.empty()) {
        config.transform = transform == "none" ? "" : transform;
    }
    if (!algorithm.empty()) {
        config.algorithm = harness::parse_algorithm(algorithm);
    }
    if (!dims.empty()) {
        config.dims = parse_size_list(dims);
    }
    if (!epoch_grid.empty()) {
        config.epoch_grid = parse_size_list(epoch_grid);
    }
    if (population >= 0) {
        config.population = static_cast<std::size_t>(population);
    }
    if (trials >= 0) {
        config.trials = static_cast<std::size_t>(trials);
    }
    if (seed >= 0) {
        config.seed = static_cast<std::uint64_t>(seed);
    }
    if (!out_file.empty()) {
        config.output_file = out_file;
    }

    const auto rows = harness::run_scalability(config);
    std::cout << "dim,epochs,runtime_s,rel_error\n";
    for (const auto& row : rows) {
        std::cout << row.dim << ',' << row.epochs << ',' << row.runtime_s << ',';
        if (row.rel_error) {
            std::cout << *row.rel_error;
        } else {
            std::cout << "na";
        }
        std::cout << '\n';
    }
    return 0;
}

// Builds the score matrix from an aggregates.csv written by `run`.
stats::ScoreMatrix score_matrix_from_csv(const std::string& path) {
    const harness::CsvTable table = harness::read_csv(path);
    std::size_t col_alg = 0, col_problem = 1, col_avg = 2;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (table.header[i] == "algorithm") {
            col_alg = i;
        } else if (table.header[i] == "problem") {
            col_problem = i;
        } else if (table.header[i] == "avg") {
            col_avg = i;
        }
    }

    stats::ScoreMatrix m;
    std::map<std::string, std::size_t> algo_index;
    std::map<std::string, std::size_t> task_index;
    for (const auto& row : table.rows) {
        if (!algo_index.contains(row[col_alg])) {
            algo_index[row[col_alg]] = m.algorithms.size();
            m.algorithms.push_back(row[col_alg]);
        }
        if (!task_index.contains(row[col_problem])) {
            task_index[row[col_problem]] = m.tasks.size();
            m.tasks.push_back(row[col_problem]);
        }
    }
    m.values.assign(m.algorithms.size(), foxopt::Vec(m.tasks.size(), 0.0));
    for (const auto& row : table.rows) {
        m.values[algo_index[row[col_alg]]][task_index[row[col_problem]]] =
            foxopt::harness::parse_double(row[col_avg]);
    }
    return m;
}

int cmd_stats(const std::string& input, const std::string& out_file, double tolerance) {
    const stats::ScoreMatrix m = score_matrix_from_csv(input);
    const nlohmann::json report = stats::comparison_report(m, tolerance);
    if (out_file.empty()) {
        std::cout << report.dump(2) << '\n';
    } else {
        std::ofstream out(out_file);
        if (!out) {
            throw std::runtime_error("cannot write " + out_file);
        }
        out << report.dump(2) << '\n';
    }
    return 0;
}

int cmd_convergence(const std::string& report_file, const std::string& problem,
                    const std::string& out_file) {
    std::ifstream in(report_file);
    if (!in) {
        throw std::runtime_error("cannot open report: " + report_file);
    }
    nlohmann::json report;
    in >> report;

    if (out_file.empty()) {
        harness::emit_convergence_json(report, problem, std::cout);
    } else {
        std::ofstream out(out_file);
        if (!out) {
            throw std::runtime_error("cannot write " + out_file);
        }
        harness::emit_convergence_json(report, problem, out);
    }
    return 0;
}

int cmd_catalog(const std::string& out_file) {
    nlohmann::json catalog;
    catalog["benchmarks"] = bench::catalog_json();
    catalog["design_problems"] = eng::catalog_json();
    if (out_file.empty()) {
        std::cout << catalog.dump(2) << '\n';
    } else {
        std::ofstream out(out_file);
        if (!out) {
            throw std::runtime_error("cannot write " + out_file);
        }
        out << catalog.dump(2) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"FOX/IFOX optimization experiment harness"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run an (algorithm x problem x trial) grid");
    std::string run_config, run_problems, run_algorithms, run_transform, run_fox_a, run_out;
    long long run_epochs = -1, run_population = -1, run_trials = -1, run_seed = -1,
              run_threads = -1, run_dim = -1;
    bool run_no_timing = false;
    bool run_strict_reeval = false;
    run->add_option("--config", run_config, "key = value config file");
    run->add_option("--problems", run_problems, "comma list: tids, names, classical, rwp");
    run->add_option("--algorithms", run_algorithms, "comma list: fox, ifox");
    run->add_option("--epochs", run_epochs, "epochs per trial (default 500)");
    run->add_option("--population", run_population, "agents per trial (default 30)");
    run->add_option("--trials", run_trials, "independent trials per cell (default 30)");
    run->add_option("--seed", run_seed, "base seed; trial i uses seed + i");
    run->add_option("--threads", run_threads, "worker threads (default: cores)");
    run->add_option("--dim", run_dim, "override problem dimension (benchmarks)");
    run->add_option("--transform", run_transform, "shift | rotate | shift-rotate");
    run->add_option("--fox-a-variant", run_fox_a,
                    "fox exploration coefficient: printed | decreasing");
    run->add_flag("--strict-reeval", run_strict_reeval,
                  "ifox: re-evaluate agents in the update pass (3 evals/agent/epoch)");
    run->add_option("--out", run_out, "output directory");
    run->add_flag("--no-timing", run_no_timing, "zero wall-clock fields (byte-stable output)");

    // scalability
    auto* scal = app.add_subcommand("scalability", "Runtime/error sweep over dims and epochs");
    std::string scal_problem, scal_algorithm, scal_dims, scal_epochs, scal_transform, scal_out;
    long long scal_population = -1, scal_trials = -1, scal_seed = -1;
    scal->add_option("--problem", scal_problem, "problem name (default CL11 = rastrigin)");
    scal->add_option("--algorithm", scal_algorithm, "fox | ifox (default ifox)");
    scal->add_option("--dims", scal_dims, "comma list of dimensions");
    scal->add_option("--epochs-grid", scal_epochs, "comma list of epoch budgets");
    scal->add_option("--population", scal_population, "agents per trial");
    scal->add_option("--trials", scal_trials, "trials per cell");
    scal->add_option("--seed", scal_seed, "base seed");
    scal->add_option("--transform", scal_transform,
                     "shift | rotate | shift-rotate | none (default shift)");
    scal->add_option("--out", scal_out, "output CSV path");

    // stats
    auto* st = app.add_subcommand("stats", "Friedman/Wilcoxon/tally report from aggregates.csv");
    std::string stats_input, stats_out;
    double stats_tolerance = 1e-8;
    st->add_option("--input", stats_input, "aggregates.csv from a run")->required();
    st->add_option("--out", stats_out, "output JSON path (default stdout)");
    st->add_option("--tolerance", stats_tolerance, "tie tolerance on Avg values");

    // convergence
    auto* conv = app.add_subcommand("convergence", "Mean convergence curves for one problem");
    std::string conv_report, conv_problem, conv_out;
    conv->add_option("--report", conv_report, "report.json from a run")->required();
    conv->add_option("--problem", conv_problem, "problem name")->required();
    conv->add_option("--out", conv_out, "output CSV path (default stdout)");

    // catalog
    auto* cat = app.add_subcommand("catalog", "Emit the problem catalogs as JSON");
    std::string cat_out;
    cat->add_option("--out", cat_out, "output JSON path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) {
            return cmd_run(run_config, run_problems, run_algorithms, run_epochs, run_population,
                           run_trials, run_seed, run_threads, run_dim, run_transform, run_fox_a,
                           run_strict_reeval, run_out, run_no_timing);
        }
        if (scal->parsed()) {
            return cmd_scalability(scal_problem, scal_algorithm, scal_dims, scal_epochs,
                                   scal_population, scal_trials, scal_seed, scal_transform,
                                   scal_out);
        }
        if (st->parsed()) {
            return cmd_stats(stats_input, stats_out, stats_tolerance);
        }
        if (conv->parsed()) {
            return cmd_convergence(conv_report, conv_problem, conv_out);
        }
        if (cat->parsed()) {
            return cmd_catalog(cat_out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
