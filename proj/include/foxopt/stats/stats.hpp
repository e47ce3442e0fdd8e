#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "foxopt/rng.hpp"

#include "json.hpp"

namespace foxopt::stats {

/// Average-of-tasks score table: values[algorithm][task], lower is better.
struct ScoreMatrix {
    std::vector<std::string> algorithms;
    std::vector<std::string> tasks;
    std::vector<Vec> values;
};

/// Throws std::invalid_argument on shape mismatch or non-finite cells.
void validate(const ScoreMatrix& m);

/// Ascending ranks (1 = smallest) with tied values receiving the average of
/// the tied rank positions.
Vec rank_ascending(const Vec& values);

/// Mean rank per algorithm across tasks (rank 1 = best on a task).
/// Requires >= 2 algorithms and >= 1 task.
Vec friedman_ranks(const ScoreMatrix& m);

struct WilcoxonResult {
    double r_plus = 0.0;          // rank sum of positive differences a - b
    double r_minus = 0.0;         // rank sum of negative differences
    double p_value = 1.0;         // two-sided
    std::size_t n_effective = 0;  // pairs with nonzero difference
};

/// Paired two-sided Wilcoxon signed-rank test on a - b. Zero differences are
/// dropped; ties in |d| get average ranks. The p-value is exact (full sign
/// distribution) for n_effective <= 20 and a normal approximation with
/// continuity and tie corrections beyond. All-zero differences yield the
/// degenerate result p = 1, n_effective = 0.
WilcoxonResult wilcoxon_signed_rank(const Vec& a, const Vec& b);

struct Tally {
    std::size_t wins = 0;
    std::size_t ties = 0;
    std::size_t losses = 0;
};

/// Counts, per (task, opponent) pair: win when subject < opponent - tolerance,
/// tie within +-tolerance, loss otherwise.
Tally win_tie_loss(const ScoreMatrix& m, std::string_view subject, double tolerance = 1e-8);

/// Friedman mean ranks, all pairwise Wilcoxon tests on per-task scores, and
/// per-algorithm win/tie/loss tallies, as one JSON document.
nlohmann::json comparison_report(const ScoreMatrix& m, double tie_tolerance = 1e-8);

} // namespace foxopt::stats
