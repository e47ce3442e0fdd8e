// Exercises the installed binary end to end: exit codes, file outputs, and
// the stats/convergence pipeline over real artifacts.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string binary() {
    const char* bin = std::getenv("FOXOPT_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "FOXOPT_BIN must point at the CLI binary");
    return bin;
}

int run(const std::string& args) {
    const std::string command = binary() + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("foxopt_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("run: tiny grid exits 0 and writes the expected files") {
    const fs::path dir = fresh_dir("run");
    const int code = run("run --problems CL1 --algorithms fox,ifox --epochs 3 --population 4 "
                         "--trials 2 --seed 5 --dim 2 --threads 1 --out " +
                         (dir / "out").string());
    CHECK(code == 0);
    CHECK(fs::exists(dir / "out" / "aggregates.csv"));
    CHECK(fs::exists(dir / "out" / "report.json"));
    CHECK(fs::exists(dir / "out" / "traces" / "fox_CL1.csv"));
    CHECK(fs::exists(dir / "out" / "traces" / "ifox_CL1.csv"));
}

TEST_CASE("run: unknown problem is a config error (exit 1)") {
    CHECK(run("run --problems NOPE --epochs 1 --population 2 --trials 1") == 1);
}

TEST_CASE("run: unknown algorithm is a config error (exit 1)") {
    CHECK(run("run --problems CL1 --algorithms gecko --epochs 1 --population 2 --trials 1") == 1);
}

TEST_CASE("run: algorithm variant flags parse and validate") {
    CHECK(run("run --problems CL1 --algorithms fox --epochs 2 --population 2 --trials 1 "
              "--dim 2 --fox-a-variant decreasing") == 0);
    CHECK(run("run --problems CL1 --algorithms ifox --epochs 2 --population 2 --trials 1 "
              "--dim 2 --strict-reeval") == 0);
    CHECK(run("run --problems CL1 --algorithms fox --epochs 2 --population 2 --trials 1 "
              "--dim 2 --fox-a-variant sideways") == 1);
}

TEST_CASE("parse errors exit 1") {
    CHECK(run("definitely-not-a-subcommand") == 1);
}

TEST_CASE("scalability: zero epochs rejected, valid grid writes csv") {
    const fs::path dir = fresh_dir("scal");
    CHECK(run("scalability --problem CL11 --dims 2 --epochs-grid 0 --trials 1") == 1);

    const int code = run("scalability --problem CL11 --dims 2,3 --epochs-grid 2,4 --trials 2 "
                         "--population 4 --out " +
                         (dir / "scalability.csv").string());
    CHECK(code == 0);
    std::ifstream csv(dir / "scalability.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "dim,epochs,runtime_s,rel_error");
    std::size_t rows = 0;
    for (std::string line; std::getline(csv, line);) {
        if (!line.empty()) {
            ++rows;
        }
    }
    CHECK(rows == 4);
}

TEST_CASE("stats and convergence consume run outputs") {
    const fs::path dir = fresh_dir("pipeline");
    REQUIRE(run("run --problems CL1,CL2,CL11,CL15,CL19 --algorithms fox,ifox --epochs 4 "
                "--population 4 --trials 2 --seed 5 --dim 2 --threads 1 --out " +
                (dir / "out").string()) == 0);

    const int stats_code = run("stats --input " + (dir / "out" / "aggregates.csv").string() +
                               " --out " + (dir / "stats.json").string());
    CHECK(stats_code == 0);
    std::ifstream in(dir / "stats.json");
    nlohmann::json report;
    in >> report;
    CHECK(report.contains("friedman_mean_rank"));
    CHECK(report["friedman_mean_rank"].contains("ifox"));
    REQUIRE(report.contains("wilcoxon"));
    REQUIRE(report["wilcoxon"].size() == 1); // one fox/ifox pair over five tasks
    CHECK(report["wilcoxon"][0].contains("p_value"));
    CHECK(report.contains("win_tie_loss"));

    const int conv_code = run("convergence --report " + (dir / "out" / "report.json").string() +
                              " --problem CL1 --out " + (dir / "conv.csv").string());
    CHECK(conv_code == 0);
    std::ifstream conv(dir / "conv.csv");
    std::string header;
    std::getline(conv, header);
    CHECK(header == "algorithm,epoch,mean_best_f");
    std::size_t rows = 0;
    for (std::string line; std::getline(conv, line);) {
        if (!line.empty()) {
            ++rows;
        }
    }
    CHECK(rows == 8); // two algorithms x four epochs

    CHECK(run("convergence --report " + (dir / "out" / "report.json").string() +
              " --problem CL7") == 1);
    CHECK(run("stats --input /nonexistent.csv") == 2);
}

TEST_CASE("catalog emits both suites") {
    const fs::path dir = fresh_dir("catalog");
    REQUIRE(run("catalog --out " + (dir / "catalog.json").string()) == 0);
    std::ifstream in(dir / "catalog.json");
    nlohmann::json catalog;
    in >> catalog;
    CHECK(catalog["benchmarks"].size() == 20);
    CHECK(catalog["design_problems"].size() == 10);
}
