#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "foxopt/stats/stats.hpp"

namespace foxopt::stats {

void validate(const ScoreMatrix& m) {
    if (m.values.size() != m.algorithms.size()) {
        throw std::invalid_argument("score matrix: row count != algorithm count");
    }
    for (const Vec& row : m.values) {
        if (row.size() != m.tasks.size()) {
            throw std::invalid_argument("score matrix: row length != task count");
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("score matrix: non-finite cell");
            }
        }
    }
}

Vec rank_ascending(const Vec& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    Vec ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        // Positions i..j (0-based) share the average of ranks i+1..j+1.
        const double avg = static_cast<double>(i + j + 2) / 2.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = avg;
        }
        i = j + 1;
    }
    return ranks;
}

Vec friedman_ranks(const ScoreMatrix& m) {
    validate(m);
    if (m.algorithms.size() < 2) {
        throw std::invalid_argument("friedman_ranks: need at least two algorithms");
    }
    if (m.tasks.empty()) {
        throw std::invalid_argument("friedman_ranks: need at least one task");
    }

    const std::size_t algos = m.algorithms.size();
    const std::size_t tasks = m.tasks.size();
    Vec mean_ranks(algos, 0.0);
    Vec column(algos);
    for (std::size_t t = 0; t < tasks; ++t) {
        for (std::size_t a = 0; a < algos; ++a) {
            column[a] = m.values[a][t];
        }
        const Vec ranks = rank_ascending(column);
        for (std::size_t a = 0; a < algos; ++a) {
            mean_ranks[a] += ranks[a];
        }
    }
    for (double& r : mean_ranks) {
        r /= static_cast<double>(tasks);
    }
    return mean_ranks;
}

Tally win_tie_loss(const ScoreMatrix& m, std::string_view subject, double tolerance) {
    validate(m);
    std::size_t subject_row = m.algorithms.size();
    for (std::size_t a = 0; a < m.algorithms.size(); ++a) {
        if (m.algorithms[a] == subject) {
            subject_row = a;
            break;
        }
    }
    if (subject_row == m.algorithms.size()) {
        throw std::invalid_argument("win_tie_loss: unknown subject " + std::string(subject));
    }

    Tally tally;
    for (std::size_t t = 0; t < m.tasks.size(); ++t) {
        const double own = m.values[subject_row][t];
        for (std::size_t a = 0; a < m.algorithms.size(); ++a) {
            if (a == subject_row) {
                continue;
            }
            const double other = m.values[a][t];
            if (own < other - tolerance) {
                ++tally.wins;
            } else if (std::fabs(own - other) <= tolerance) {
                ++tally.ties;
            } else {
                ++tally.losses;
            }
        }
    }
    return tally;
}

nlohmann::json comparison_report(const ScoreMatrix& m, double tie_tolerance) {
    const Vec ranks = friedman_ranks(m);

    nlohmann::json report;
    for (std::size_t a = 0; a < m.algorithms.size(); ++a) {
        report["friedman_mean_rank"][m.algorithms[a]] = ranks[a];
    }

    // Pairwise tests need at least five paired tasks; below that only ranks
    // and tallies are reportable.
    report["wilcoxon"] = nlohmann::json::array();
    for (std::size_t a = 0; a < m.algorithms.size() && m.tasks.size() >= 5; ++a) {
        for (std::size_t b = a + 1; b < m.algorithms.size(); ++b) {
            const WilcoxonResult w = wilcoxon_signed_rank(m.values[a], m.values[b]);
            nlohmann::json entry;
            entry["a"] = m.algorithms[a];
            entry["b"] = m.algorithms[b];
            entry["r_plus"] = w.r_plus;
            entry["r_minus"] = w.r_minus;
            entry["p_value"] = w.p_value;
            entry["n_effective"] = w.n_effective;
            report["wilcoxon"].push_back(entry);
        }
    }

    for (const std::string& algo : m.algorithms) {
        const Tally tally = win_tie_loss(m, algo, tie_tolerance);
        report["win_tie_loss"][algo] = {
            {"wins", tally.wins}, {"ties", tally.ties}, {"losses", tally.losses}};
    }
    return report;
}

} // namespace foxopt::stats
