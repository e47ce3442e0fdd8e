#include <stdexcept>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "foxopt/harness/config.hpp"
#include "foxopt/harness/csv.hpp"
#include "foxopt/harness/experiment.hpp"
#include "foxopt/harness/scalability.hpp"

#include "doctest.h"

using namespace foxopt;
using namespace foxopt::harness;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("foxopt_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ExperimentConfig tiny_config() {
    ExperimentConfig config;
    config.problems = {"CL1"};
    config.algorithms = {Algorithm::ifox};
    config.epochs = 5;
    config.population = 4;
    config.trials = 3;
    config.seed = 11;
    config.dim_override = 2;
    config.threads = 1;
    return config;
}

} // namespace

TEST_CASE("minimal grid: one trial, one epoch, one trace of length one") {
    ExperimentConfig config;
    config.problems = {"CL1"};
    config.algorithms = {Algorithm::ifox};
    config.epochs = 1;
    config.population = 3;
    config.trials = 1;
    config.dim_override = 2;
    const ExperimentReport report = run_experiment(config);
    REQUIRE(report.cells.size() == 1);
    REQUIRE(report.traces.size() == 1);
    REQUIRE(report.traces[0].size() == 1);
    CHECK(report.traces[0][0].best_per_epoch.size() == 1);
    CHECK(report.cells[0].mean_curve.size() == 1);
}

TEST_CASE("problem name resolution and aliases") {
    CHECK(resolve_problem("sphere", 0, "", 1).name == "CL1");
    CHECK(resolve_problem("CL11", 0, "", 1).dim == 30);
    CHECK(resolve_problem("rastrigin", 10, "", 1).dim == 10);
    CHECK(resolve_problem("pvd", 0, "", 1).name == "pvd");
    CHECK_THROWS_AS(resolve_problem("no_such_problem", 0, "", 1), std::invalid_argument);
    CHECK_THROWS_AS(resolve_problem("pvd", 0, "shift", 1), std::invalid_argument);

    const auto classical = expand_problem_names({"classical"});
    CHECK(classical.size() == 20);
    const auto rwp = expand_problem_names({"rwp"});
    CHECK(rwp.size() == 10);
    const auto mixed = expand_problem_names({"CL3", "wbp"});
    CHECK(mixed == std::vector<std::string>{"CL3", "wbp"});
}

TEST_CASE("transformed variants keep their label and bounds") {
    const BoundedProblem shifted = resolve_problem("CL1", 4, "shift", 7);
    CHECK(shifted.name == "CL1-s");
    CHECK(shifted.dim == 4);
    const BoundedProblem rotated = resolve_problem("CL1", 4, "rotate", 7);
    CHECK(rotated.name == "CL1-r");
    const BoundedProblem both = resolve_problem("CL1", 4, "shift-rotate", 7);
    CHECK(both.name == "CL1-sr");
    CHECK_THROWS_AS(resolve_problem("CL1", 4, "mangle", 7), std::invalid_argument);

    // The rotated sphere still evaluates finitely at the box corner.
    const Vec corner(4, rotated.upper[0]);
    CHECK(std::isfinite(rotated.objective(corner)));
}

TEST_CASE("optimum claims survive transforms only when the argmin stays boxed") {
    // Centered optimum: every transform keeps the value claim.
    CHECK(resolve_problem("CL11", 6, "shift", 3).known_optimum.has_value());
    CHECK(resolve_problem("CL11", 6, "rotate", 3).known_optimum.has_value());
    CHECK(resolve_problem("CL11", 6, "shift-rotate", 3).known_optimum.has_value());

    // Off-center optimum near the wall (420.97 in a +-500 box): a capped
    // shift keeps it inside, a rotation throws it far out of the box.
    const BoundedProblem shifted = resolve_problem("CL14", 6, "shift", 3);
    REQUIRE(shifted.known_optimum.has_value());
    const BoundedProblem rotated = resolve_problem("CL14", 6, "rotate", 3);
    CHECK_FALSE(rotated.known_optimum.has_value());

    // No known minimizer at all: transformed variants must not inherit the
    // dimension-specific value.
    CHECK_FALSE(resolve_problem("CL16", 0, "shift", 3).known_optimum.has_value());

    // The shifted argmin of a centered function really is reachable: probe
    // the shifted rastrigin at its relocated minimizer via a fine local scan.
    const BoundedProblem probe = resolve_problem("CL11", 2, "shift", 3);
    double best = std::numeric_limits<double>::infinity();
    for (double x = -5.12; x <= 5.12; x += 0.005) {
        for (double y = -5.12; y <= 5.12; y += 0.005) {
            best = std::min(best, probe.objective({x, y}));
        }
    }
    CHECK(best < 0.01); // grid pitch bounds the residual
}

TEST_CASE("deterministic outputs: identical runs, any thread count") {
    ExperimentConfig config = tiny_config();
    config.measure_time = false;

    const fs::path dir_a = fresh_dir("det_a");
    const fs::path dir_b = fresh_dir("det_b");
    config.output_dir = dir_a;
    run_experiment(config);
    config.output_dir = dir_b;
    config.threads = 4; // scheduling must not leak into results
    run_experiment(config);

    CHECK(slurp(dir_a / "aggregates.csv") == slurp(dir_b / "aggregates.csv"));
    CHECK(slurp(dir_a / "traces" / "ifox_CL1.csv") == slurp(dir_b / "traces" / "ifox_CL1.csv"));
    CHECK(slurp(dir_a / "report.json") == slurp(dir_b / "report.json"));
}

TEST_CASE("written report carries the comparison block for multi-algorithm runs") {
    ExperimentConfig config = tiny_config();
    config.problems = {"CL1", "CL2", "CL11", "CL15", "CL19"};
    config.algorithms = {Algorithm::fox, Algorithm::ifox};
    const fs::path dir = fresh_dir("comparison");
    config.output_dir = dir;
    run_experiment(config);

    std::ifstream in(dir / "report.json");
    nlohmann::json doc;
    in >> doc;
    REQUIRE(doc.contains("comparison"));
    CHECK(doc["comparison"].contains("friedman_mean_rank"));
    CHECK(doc["comparison"]["friedman_mean_rank"].contains("fox"));
    CHECK(doc["comparison"]["wilcoxon"].size() == 1);
    CHECK(doc["comparison"].contains("win_tie_loss"));
}

TEST_CASE("trial seeds are positional: prefix grids coincide") {
    ExperimentConfig small = tiny_config();
    small.trials = 2;
    ExperimentConfig big = tiny_config();
    big.trials = 3;

    const ExperimentReport a = run_experiment(small);
    const ExperimentReport b = run_experiment(big);
    for (std::size_t trial = 0; trial < 2; ++trial) {
        CHECK(a.traces[0][trial].best_per_epoch == b.traces[0][trial].best_per_epoch);
        CHECK(a.traces[0][trial].final_best_x == b.traces[0][trial].final_best_x);
    }
}

TEST_CASE("aggregates are recomputable from the persisted traces") {
    ExperimentConfig config = tiny_config();
    const fs::path dir = fresh_dir("roundtrip");
    config.output_dir = dir;
    const ExperimentReport report = run_experiment(config);

    const CsvTable traces = read_csv((dir / "traces" / "ifox_CL1.csv").string());
    REQUIRE(traces.rows.size() == config.trials * config.epochs);

    // Final best per trial = value at the last epoch.
    Vec finals(config.trials, 0.0);
    for (const auto& row : traces.rows) {
        const std::size_t trial = std::stoull(row[0]);
        const std::size_t epoch = std::stoull(row[1]);
        if (epoch + 1 == config.epochs) {
            finals[trial] = parse_double(row[2]);
        }
    }
    double mean = 0.0;
    for (double f : finals) {
        mean += f;
    }
    mean /= static_cast<double>(config.trials);

    const CsvTable aggregates = read_csv((dir / "aggregates.csv").string());
    REQUIRE(aggregates.rows.size() == 1);
    CHECK(parse_double(aggregates.rows[0][2]) == mean);

    double best = finals[0], worst = finals[0];
    for (double f : finals) {
        best = std::min(best, f);
        worst = std::max(worst, f);
    }
    CHECK(parse_double(aggregates.rows[0][4]) == best);
    CHECK(parse_double(aggregates.rows[0][5]) == worst);
}

TEST_CASE("report invariants: best <= avg <= worst, std >= 0, pt finite") {
    ExperimentConfig config = tiny_config();
    config.problems = {"CL1", "gtp"};
    config.algorithms = {Algorithm::fox, Algorithm::ifox};
    const ExperimentReport report = run_experiment(config);
    REQUIRE(report.cells.size() == 4);
    for (const CellStats& cell : report.cells) {
        CHECK(cell.best <= cell.avg);
        CHECK(cell.avg <= cell.worst);
        CHECK(cell.stdev >= 0.0);
        CHECK(cell.pt_seconds > 0.0); // timing on: per-epoch time is real
        CHECK(std::isfinite(cell.pt_seconds));
        CHECK(cell.evaluations > 0.0);
        for (std::size_t e = 1; e < cell.mean_curve.size(); ++e) {
            REQUIRE(cell.mean_curve[e] <= cell.mean_curve[e - 1]);
        }
    }
}

TEST_CASE("convergence emission: rows, pass-through values, monotonicity") {
    ExperimentConfig config = tiny_config();
    config.algorithms = {Algorithm::fox, Algorithm::ifox};
    config.epochs = 500;
    config.trials = 2;
    config.population = 5;
    const ExperimentReport report = run_experiment(config);

    std::ostringstream out;
    emit_convergence(report, "CL1", out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "algorithm,epoch,mean_best_f");

    std::size_t rows = 0;
    double previous = std::numeric_limits<double>::infinity();
    std::string previous_algorithm;
    while (std::getline(lines, line)) {
        const auto fields = split_csv_line(line);
        REQUIRE(fields.size() == 3);
        const double value = parse_double(fields[2]);
        if (fields[0] != previous_algorithm) {
            previous = std::numeric_limits<double>::infinity();
            previous_algorithm = fields[0];
        }
        CHECK(value <= previous);
        previous = value;
        ++rows;
    }
    CHECK(rows == 1000); // two algorithms x 500 epochs

    // Values equal the stored mean curves exactly.
    std::ostringstream again;
    emit_convergence(report, "CL1", again);
    std::istringstream check(again.str());
    std::getline(check, line);
    for (const CellStats& cell : report.cells) {
        for (double expected : cell.mean_curve) {
            REQUIRE(std::getline(check, line));
            const auto fields = split_csv_line(line);
            CHECK(fields[0] == cell.algorithm);
            CHECK(parse_double(fields[2]) == expected);
        }
    }

    std::ostringstream missing;
    CHECK_THROWS_AS(emit_convergence(report, "CL9", missing), std::invalid_argument);
}

TEST_CASE("config file parsing and overrides") {
    const std::string text = "# comment\n"
                             "[run]\n"
                             "problems = CL1, CL2\n"
                             "algorithms = ifox\n"
                             "epochs = 7\n"
                             "population = 5\n"
                             "trials = 2\n"
                             "seed = 99\n";
    const KeyValues kv = parse_config_text(text);
    CHECK(kv.at("run.epochs") == "7");

    const fs::path dir = fresh_dir("config");
    const fs::path file = dir / "experiment.ini";
    std::ofstream(file) << text;

    const ExperimentConfig config = experiment_config_from_file(file.string());
    CHECK(config.problems == std::vector<std::string>{"CL1", "CL2"});
    REQUIRE(config.algorithms.size() == 1);
    CHECK(config.algorithms[0] == Algorithm::ifox);
    CHECK(config.epochs == 7);
    CHECK(config.population == 5);
    CHECK(config.trials == 2);
    CHECK(config.seed == 99);

    CHECK_THROWS_AS(parse_config_text("no equals sign"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("[broken\nkey = 1"), std::invalid_argument);
    CHECK_THROWS_AS(experiment_config_from_file("/nonexistent/path.ini"),
                    std::invalid_argument);
}

TEST_CASE("algorithm variant flags reach the optimizers") {
    ExperimentConfig config = tiny_config();
    config.problems = {"CL11"};
    config.algorithms = {Algorithm::fox};
    config.epochs = 40;
    config.population = 8;

    const ExperimentReport printed = run_experiment(config);
    config.fox_a_variant = fox::AVariant::decreasing;
    const ExperimentReport decreasing = run_experiment(config);
    // Same seeds, different exploration schedule: the traces must diverge.
    CHECK(printed.traces[0][0].best_per_epoch != decreasing.traces[0][0].best_per_epoch);

    ExperimentConfig ifox_config = tiny_config();
    ifox_config.epochs = 15;
    const ExperimentReport cached = run_experiment(ifox_config);
    ifox_config.ifox_strict_reeval = true;
    const ExperimentReport strict = run_experiment(ifox_config);
    CHECK(cached.traces[0][0].best_per_epoch == strict.traces[0][0].best_per_epoch);
    CHECK(strict.traces[0][0].evaluations > cached.traces[0][0].evaluations);

    const std::string text = "[run]\nfox_a_variant = decreasing\nstrict_reeval = true\n";
    const fs::path dir = fresh_dir("variants");
    const fs::path file = dir / "variants.ini";
    std::ofstream(file) << text;
    const ExperimentConfig parsed = experiment_config_from_file(file.string());
    CHECK(parsed.fox_a_variant == fox::AVariant::decreasing);
    CHECK(parsed.ifox_strict_reeval);

    std::ofstream(file) << "[run]\nfox_a_variant = sideways\n";
    CHECK_THROWS_AS(experiment_config_from_file(file.string()), std::invalid_argument);
}

TEST_CASE("config errors are rejected before any work") {
    ExperimentConfig config = tiny_config();
    config.problems = {"CL1", "definitely_not_a_problem"};
    CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);

    ExperimentConfig no_trials = tiny_config();
    no_trials.trials = 0;
    CHECK_THROWS_AS(run_experiment(no_trials), std::invalid_argument);

    ExperimentConfig no_problems = tiny_config();
    no_problems.problems = {};
    CHECK_THROWS_AS(run_experiment(no_problems), std::invalid_argument);
}

TEST_CASE("scalability: grid validation and the na marker") {
    ScalabilityConfig bad;
    bad.epoch_grid = {0};
    CHECK_THROWS_AS(run_scalability(bad), std::invalid_argument);

    ScalabilityConfig empty;
    empty.dims = {};
    CHECK_THROWS_AS(run_scalability(empty), std::invalid_argument);

    // A design problem has no known optimum: rel_error is unavailable.
    ScalabilityConfig no_opt;
    no_opt.problem = "pvd";
    no_opt.transform = "";
    no_opt.dims = {4};
    no_opt.epoch_grid = {3};
    no_opt.trials = 2;
    no_opt.population = 4;
    const auto rows = run_scalability(no_opt);
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].rel_error.has_value());

    const fs::path dir = fresh_dir("scal");
    write_scalability_csv(rows, dir / "scalability.csv");
    const std::string text = slurp(dir / "scalability.csv");
    CHECK(text.find("na") != std::string::npos);

    ScalabilityConfig with_opt;
    with_opt.problem = "CL11";
    with_opt.dims = {3};
    with_opt.epoch_grid = {4};
    with_opt.trials = 2;
    with_opt.population = 4;
    const auto rastrigin_rows = run_scalability(with_opt);
    REQUIRE(rastrigin_rows.size() == 1);
    REQUIRE(rastrigin_rows[0].rel_error.has_value());
    CHECK(*rastrigin_rows[0].rel_error >= 0.0);
    CHECK(rastrigin_rows[0].runtime_s >= 0.0);
}

TEST_CASE("csv double formatting round-trips exactly") {
    RngStream rng(1717);
    for (int i = 0; i < 1000; ++i) {
        const double v = (rng.unit() - 0.5) * std::pow(10.0, rng.uniform(-20.0, 20.0));
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
    CHECK(format_double(0.0) == "0");
    CHECK(std::strtod(format_double(1e-300).c_str(), nullptr) == 1e-300);
}

TEST_CASE("constrained cells report feasibility and violations") {
    ExperimentConfig config = tiny_config();
    config.problems = {"pvd", "CL1"};
    config.dim_override = 0;
    config.epochs = 20;
    const ExperimentReport report = run_experiment(config);

    const auto json = report_to_json(report);
    for (const auto& cell : json["cells"]) {
        if (cell["problem"] == "pvd") {
            REQUIRE(cell.contains("feasible_trials"));
            REQUIRE(cell.contains("worst_violation"));
            CHECK(cell["worst_violation"].size() == 4);
        } else {
            CHECK_FALSE(cell.contains("feasible_trials"));
        }
        CHECK(cell.contains("opposition_moves"));
    }
}

TEST_CASE("score rows pivot the report into a matrix") {
    ExperimentConfig config = tiny_config();
    config.problems = {"CL1", "CL19"};
    config.algorithms = {Algorithm::fox, Algorithm::ifox};
    const ExperimentReport report = run_experiment(config);
    const ScoreRows rows = score_rows(report);
    CHECK(rows.algorithms == std::vector<std::string>{"fox", "ifox"});
    CHECK(rows.problems == std::vector<std::string>{"CL1", "CL19"});
    REQUIRE(rows.avg.size() == 2);
    CHECK(rows.avg[0].size() == 2);
}
