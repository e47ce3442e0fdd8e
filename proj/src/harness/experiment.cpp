#include "foxopt/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "foxopt/benchmarks/registry.hpp"
#include "foxopt/benchmarks/transforms.hpp"
#include "foxopt/engineering/constrained.hpp"
#include "foxopt/fox.hpp"
#include "foxopt/harness/config.hpp"
#include "foxopt/harness/csv.hpp"
#include "foxopt/ifox.hpp"
#include "foxopt/stats/stats.hpp"

namespace foxopt::harness {

std::string algorithm_name(Algorithm a) {
    return a == Algorithm::fox ? "fox" : "ifox";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "fox") {
        return Algorithm::fox;
    }
    if (name == "ifox") {
        return Algorithm::ifox;
    }
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

namespace {

const std::map<std::string, std::string>& base_name_to_tid() {
    static const std::map<std::string, std::string> map = [] {
        std::map<std::string, std::string> m;
        for (const auto& spec : bench::registry()) {
            m[spec.base] = spec.tid;
        }
        return m;
    }();
    return map;
}

bool is_engineering(const std::string& name) {
    for (const auto& p : eng::problem_catalog()) {
        if (p.base.name == name) {
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<std::string> expand_problem_names(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const std::string& name : names) {
        if (name == "classical") {
            for (const auto& spec : bench::registry()) {
                out.push_back(spec.tid);
            }
        } else if (name == "rwp") {
            for (const auto& p : eng::problem_catalog()) {
                out.push_back(p.base.name);
            }
        } else {
            out.push_back(name);
        }
    }
    return out;
}

BoundedProblem resolve_problem(const std::string& name, std::size_t dim_override,
                               const std::string& transform, std::uint64_t seed) {
    std::string tid = name;
    if (auto it = base_name_to_tid().find(name); it != base_name_to_tid().end()) {
        tid = it->second;
    }

    if (is_engineering(name)) {
        if (!transform.empty()) {
            throw std::invalid_argument("transforms only apply to benchmark functions");
        }
        return eng::as_bounded(eng::find(name));
    }

    BoundedProblem problem = bench::make_problem(tid, dim_override, seed);
    if (transform.empty()) {
        return problem;
    }

    const bool want_shift = transform == "shift" || transform == "shift-rotate";
    const bool want_rotate = transform == "rotate" || transform == "shift-rotate";
    if (!want_shift && !want_rotate) {
        throw std::invalid_argument("unknown transform: " + transform);
    }

    // The minimum VALUE survives a transform only when the relocated argmin
    // provably stays inside the box: rotations keep it inside the inscribed
    // ball, shifts need per-coordinate margin. Otherwise the optimum claim
    // is dropped rather than left stale.
    const bench::BenchmarkSpec& spec = bench::find(tid);
    const double half_width = 0.5 * (spec.upper - spec.lower);
    bool optimum_survives = spec.optimum_x.has_value();
    double max_coord = 0.0;
    if (optimum_survives) {
        for (double v : *spec.optimum_x) {
            max_coord = std::max(max_coord, std::fabs(v));
        }
    }
    const double argmin_reach =
        want_rotate ? max_coord * std::sqrt(static_cast<double>(problem.dim)) : max_coord;
    double margin = half_width - argmin_reach;
    if (margin <= 0.0) {
        optimum_survives = false;
    }

    RngStream rng(seed ^ 0x5eedf00dULL);
    Vec shift;
    bench::Matrix rotation;
    if (want_shift) {
        double cap = 0.25 * (spec.upper - spec.lower);
        if (optimum_survives) {
            cap = std::min(cap, 0.9 * margin);
        }
        shift.resize(problem.dim);
        for (std::size_t i = 0; i < problem.dim; ++i) {
            shift[i] = rng.uniform(-cap, cap);
        }
    }
    if (want_rotate) {
        rotation = bench::random_rotation(rng, problem.dim);
    }

    auto transform_spec = bench::make_transform(std::move(shift), std::move(rotation));
    problem.objective = bench::transformed(std::move(transform_spec), problem.objective);
    problem.name += want_shift && want_rotate ? "-sr" : (want_shift ? "-s" : "-r");
    if (!optimum_survives) {
        problem.known_optimum.reset();
    }
    return problem;
}

namespace {

RunTrace run_one(Algorithm algorithm, const BoundedProblem& problem,
                 const OptimizerConfig& config, const ExperimentConfig& experiment) {
    if (algorithm == Algorithm::fox) {
        fox::Options options;
        options.a_variant = experiment.fox_a_variant;
        return fox::run(problem, config, options);
    }
    ifox::Options options;
    options.strict_reeval = experiment.ifox_strict_reeval;
    return ifox::run(problem, config, options);
}

void parallel_trials(std::size_t trials, std::size_t threads,
                     const std::function<void(std::size_t)>& body) {
    const std::size_t workers =
        std::max<std::size_t>(1, std::min(trials, threads == 0
                                                      ? std::thread::hardware_concurrency()
                                                      : threads));
    if (workers == 1) {
        for (std::size_t t = 0; t < trials; ++t) {
            body(t);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t t = next.fetch_add(1);
                if (t >= trials) {
                    return;
                }
                try {
                    body(t);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

CellStats aggregate(const std::string& algorithm, const std::string& problem,
                    const std::vector<RunTrace>& traces, std::size_t epochs) {
    CellStats cell;
    cell.algorithm = algorithm;
    cell.problem = problem;

    const double n = static_cast<double>(traces.size());
    double mean = 0.0;
    for (const RunTrace& t : traces) {
        mean += t.final_best_f;
    }
    mean /= n;

    double var = 0.0;
    double best = traces.front().final_best_f;
    double worst = best;
    double pt = 0.0;
    double evals = 0.0;
    for (const RunTrace& t : traces) {
        var += (t.final_best_f - mean) * (t.final_best_f - mean);
        best = std::min(best, t.final_best_f);
        worst = std::max(worst, t.final_best_f);
        pt += epochs > 0 ? t.wall_seconds / static_cast<double>(epochs) : 0.0;
        evals += static_cast<double>(t.evaluations);
    }
    cell.avg = mean;
    cell.stdev = traces.size() > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
    cell.best = best;
    cell.worst = worst;
    cell.pt_seconds = pt / n;
    cell.evaluations = evals / n;

    double opposition = 0.0;
    for (const RunTrace& t : traces) {
        opposition += static_cast<double>(t.counters.opposition);
    }
    cell.opposition_moves = opposition / n;

    cell.mean_curve.assign(epochs, 0.0);
    for (const RunTrace& t : traces) {
        for (std::size_t e = 0; e < epochs; ++e) {
            cell.mean_curve[e] += t.best_per_epoch[e];
        }
    }
    for (double& v : cell.mean_curve) {
        v /= n;
    }
    return cell;
}

void write_trace_csv(const std::filesystem::path& path, const std::vector<RunTrace>& traces) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "trial,epoch,best_f\n";
    for (std::size_t trial = 0; trial < traces.size(); ++trial) {
        const Vec& curve = traces[trial].best_per_epoch;
        for (std::size_t e = 0; e < curve.size(); ++e) {
            out << trial << ',' << e << ',' << format_double(curve[e]) << '\n';
        }
    }
}

} // namespace

ExperimentConfig experiment_config_from_file(const std::string& path) {
    const KeyValues kv = parse_config_file(path);
    ExperimentConfig config;

    auto get = [&](const std::string& key) -> const std::string* {
        if (auto it = kv.find("run." + key); it != kv.end()) {
            return &it->second;
        }
        if (auto it = kv.find("global." + key); it != kv.end()) {
            return &it->second;
        }
        return nullptr;
    };
    auto split_list = [](const std::string& text) {
        std::vector<std::string> items;
        std::string current;
        for (char c : text) {
            if (c == ',' || c == ' ') {
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
    };

    if (const auto* v = get("problems")) {
        config.problems = split_list(*v);
    }
    if (const auto* v = get("algorithms")) {
        config.algorithms.clear();
        for (const std::string& name : split_list(*v)) {
            config.algorithms.push_back(parse_algorithm(name));
        }
    }
    if (const auto* v = get("epochs")) {
        config.epochs = std::stoull(*v);
    }
    if (const auto* v = get("population")) {
        config.population = std::stoull(*v);
    }
    if (const auto* v = get("trials")) {
        config.trials = std::stoull(*v);
    }
    if (const auto* v = get("seed")) {
        config.seed = std::stoull(*v);
    }
    if (const auto* v = get("threads")) {
        config.threads = std::stoull(*v);
    }
    if (const auto* v = get("dim")) {
        config.dim_override = std::stoull(*v);
    }
    if (const auto* v = get("transform")) {
        config.transform = *v;
    }
    if (const auto* v = get("fox_a_variant")) {
        if (*v == "printed") {
            config.fox_a_variant = fox::AVariant::printed;
        } else if (*v == "decreasing") {
            config.fox_a_variant = fox::AVariant::decreasing;
        } else {
            throw std::invalid_argument("fox_a_variant must be printed or decreasing");
        }
    }
    if (const auto* v = get("strict_reeval")) {
        config.ifox_strict_reeval = *v == "true" || *v == "1" || *v == "yes";
    }
    if (const auto* v = get("out")) {
        config.output_dir = *v;
    }
    return config;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    if (config.trials == 0) {
        throw std::invalid_argument("run_experiment: trials must be >= 1");
    }
    if (config.algorithms.empty()) {
        throw std::invalid_argument("run_experiment: no algorithms selected");
    }
    const std::vector<std::string> problem_names = expand_problem_names(config.problems);
    if (problem_names.empty()) {
        throw std::invalid_argument("run_experiment: no problems selected");
    }

    // Resolve and validate everything up front so config errors surface
    // before any work.
    std::vector<BoundedProblem> problems;
    problems.reserve(problem_names.size());
    for (const std::string& name : problem_names) {
        problems.push_back(
            resolve_problem(name, config.dim_override, config.transform, config.seed));
        validate(problems.back());
    }

    ExperimentReport report;
    report.epochs = config.epochs;
    report.population = config.population;
    report.trials = config.trials;
    report.seed = config.seed;

    for (const BoundedProblem& problem : problems) {
        for (Algorithm algorithm : config.algorithms) {
            std::vector<RunTrace> traces(config.trials);
            parallel_trials(config.trials, config.threads, [&](std::size_t trial) {
                OptimizerConfig run_config;
                run_config.epochs = config.epochs;
                run_config.population = config.population;
                run_config.seed = config.seed + trial;
                traces[trial] = run_one(algorithm, problem, run_config, config);
                if (!config.measure_time) {
                    traces[trial].wall_seconds = 0.0;
                }
            });
            CellStats cell =
                aggregate(algorithm_name(algorithm), problem.name, traces, config.epochs);
            if (is_engineering(problem.name)) {
                const eng::ConstrainedProblem& constrained = eng::find(problem.name);
                std::size_t feasible = 0;
                cell.worst_violation.assign(constrained.constraints.size(), 0.0);
                for (const RunTrace& trace : traces) {
                    const Vec v = eng::violations(constrained, trace.final_best_x);
                    bool clean = true;
                    for (std::size_t g = 0; g < v.size(); ++g) {
                        cell.worst_violation[g] = std::max(cell.worst_violation[g], v[g]);
                        clean = clean && v[g] == 0.0;
                    }
                    if (clean) {
                        ++feasible;
                    }
                }
                cell.feasible_trials = feasible;
            }
            report.cells.push_back(std::move(cell));
            report.traces.push_back(std::move(traces));
        }
    }

    if (!config.output_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(config.output_dir);
        if (config.write_traces) {
            fs::create_directories(config.output_dir / "traces");
            for (std::size_t i = 0; i < report.cells.size(); ++i) {
                const CellStats& cell = report.cells[i];
                write_trace_csv(config.output_dir / "traces" /
                                    (cell.algorithm + "_" + cell.problem + ".csv"),
                                report.traces[i]);
            }
        }

        std::ofstream agg(config.output_dir / "aggregates.csv");
        if (!agg) {
            throw std::runtime_error("cannot write aggregates.csv");
        }
        agg << "algorithm,problem,avg,std,best,worst,pt_seconds,evaluations\n";
        for (const CellStats& cell : report.cells) {
            agg << cell.algorithm << ',' << cell.problem << ',' << format_double(cell.avg) << ','
                << format_double(cell.stdev) << ',' << format_double(cell.best) << ','
                << format_double(cell.worst) << ',' << format_double(cell.pt_seconds) << ','
                << format_double(cell.evaluations) << '\n';
        }
        agg.close();

        nlohmann::json doc = report_to_json(report);
        if (config.algorithms.size() >= 2) {
            const ScoreRows rows = score_rows(report);
            stats::ScoreMatrix matrix;
            matrix.algorithms = rows.algorithms;
            matrix.tasks = rows.problems;
            matrix.values = rows.avg;
            doc["comparison"] = stats::comparison_report(matrix);
        }
        std::ofstream rep(config.output_dir / "report.json");
        rep << doc.dump(2) << '\n';
    }
    return report;
}

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json out;
    out["epochs"] = report.epochs;
    out["population"] = report.population;
    out["trials"] = report.trials;
    out["seed"] = report.seed;
    out["cells"] = nlohmann::json::array();
    for (const CellStats& cell : report.cells) {
        nlohmann::json entry;
        entry["algorithm"] = cell.algorithm;
        entry["problem"] = cell.problem;
        entry["avg"] = cell.avg;
        entry["std"] = cell.stdev;
        entry["best"] = cell.best;
        entry["worst"] = cell.worst;
        entry["pt_seconds"] = cell.pt_seconds;
        entry["evaluations"] = cell.evaluations;
        entry["opposition_moves"] = cell.opposition_moves;
        if (cell.feasible_trials) {
            entry["feasible_trials"] = *cell.feasible_trials;
            entry["worst_violation"] = cell.worst_violation;
        }
        entry["mean_curve"] = cell.mean_curve;
        out["cells"].push_back(entry);
    }
    return out;
}

void emit_convergence(const ExperimentReport& report, const std::string& problem,
                      std::ostream& out) {
    emit_convergence_json(report_to_json(report), problem, out);
}

void emit_convergence_json(const nlohmann::json& report, const std::string& problem,
                           std::ostream& out) {
    bool found = false;
    out << "algorithm,epoch,mean_best_f\n";
    for (const auto& cell : report.at("cells")) {
        if (cell.at("problem").get<std::string>() != problem) {
            continue;
        }
        found = true;
        const std::string algorithm = cell.at("algorithm").get<std::string>();
        const auto& curve = cell.at("mean_curve");
        for (std::size_t e = 0; e < curve.size(); ++e) {
            out << algorithm << ',' << e << ',' << format_double(curve[e].get<double>()) << '\n';
        }
    }
    if (!found) {
        throw std::invalid_argument("convergence: problem not in report: " + problem);
    }
}

ScoreRows score_rows(const ExperimentReport& report) {
    ScoreRows rows;
    for (const CellStats& cell : report.cells) {
        if (std::find(rows.algorithms.begin(), rows.algorithms.end(), cell.algorithm) ==
            rows.algorithms.end()) {
            rows.algorithms.push_back(cell.algorithm);
        }
        if (std::find(rows.problems.begin(), rows.problems.end(), cell.problem) ==
            rows.problems.end()) {
            rows.problems.push_back(cell.problem);
        }
    }
    rows.avg.assign(rows.algorithms.size(), Vec(rows.problems.size(), 0.0));
    for (const CellStats& cell : report.cells) {
        const auto a = std::distance(
            rows.algorithms.begin(),
            std::find(rows.algorithms.begin(), rows.algorithms.end(), cell.algorithm));
        const auto p = std::distance(
            rows.problems.begin(),
            std::find(rows.problems.begin(), rows.problems.end(), cell.problem));
        rows.avg[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)] = cell.avg;
    }
    return rows;
}

} // namespace foxopt::harness
