#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "foxopt/stats/stats.hpp"

namespace foxopt::stats {

namespace {

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

/// Exact two-sided p-value from the full distribution of the positive rank
/// sum under random signs. Ranks may carry .5 halves from tie averaging, so
/// the distribution is accumulated over doubled ranks.
double exact_p_value(const Vec& ranks, double r_plus) {
    std::vector<std::uint64_t> doubled(ranks.size());
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        doubled[i] = static_cast<std::uint64_t>(std::llround(2.0 * ranks[i]));
        total += doubled[i];
    }

    // counts[s] = number of sign assignments with doubled positive rank sum s.
    std::vector<double> counts(total + 1, 0.0);
    counts[0] = 1.0;
    for (std::uint64_t r : doubled) {
        for (std::uint64_t s = total; s + 1 >= r + 1; --s) {
            if (counts[s - r] != 0.0) {
                counts[s] += counts[s - r];
            }
        }
    }

    const std::uint64_t w = static_cast<std::uint64_t>(std::llround(2.0 * r_plus));
    const std::uint64_t w_low = std::min(w, total - w);
    const std::uint64_t w_high = std::max(w, total - w);
    double tail_low = 0.0;
    double tail_high = 0.0;
    for (std::uint64_t s = 0; s <= total; ++s) {
        if (s <= w_low) {
            tail_low += counts[s];
        }
        if (s >= w_high) {
            tail_high += counts[s];
        }
    }
    const double denom = std::ldexp(1.0, static_cast<int>(ranks.size())); // 2^n
    return std::min(1.0, (tail_low + tail_high) / denom);
}

double approx_p_value(const Vec& ranks, double r_plus) {
    const double n = static_cast<double>(ranks.size());
    const double mu = n * (n + 1.0) / 4.0;

    // Tie correction: subtract sum(t^3 - t)/48 over groups of tied |d|.
    Vec sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) {
            ++j;
        }
        const double t = static_cast<double>(j - i + 1);
        tie_term += (t * t * t - t) / 48.0;
        i = j + 1;
    }
    const double sigma = std::sqrt(n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term);
    if (sigma == 0.0) {
        return 1.0;
    }
    const double z = (std::fabs(r_plus - mu) - 0.5) / sigma;
    return std::min(1.0, 2.0 * (1.0 - normal_cdf(std::max(0.0, z))));
}

} // namespace

WilcoxonResult wilcoxon_signed_rank(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("wilcoxon_signed_rank: length mismatch");
    }
    if (a.size() < 5) {
        throw std::invalid_argument("wilcoxon_signed_rank: need at least 5 pairs");
    }

    Vec diffs;
    diffs.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d != 0.0) {
            diffs.push_back(d);
        }
    }

    WilcoxonResult result;
    result.n_effective = diffs.size();
    if (diffs.empty()) {
        return result; // p = 1, both rank sums 0
    }

    Vec abs_diffs(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        abs_diffs[i] = std::fabs(diffs[i]);
    }
    const Vec ranks = rank_ascending(abs_diffs);

    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i] > 0.0) {
            result.r_plus += ranks[i];
        } else {
            result.r_minus += ranks[i];
        }
    }

    result.p_value = diffs.size() <= 20 ? exact_p_value(ranks, result.r_plus)
                                        : approx_p_value(ranks, result.r_plus);
    return result;
}

} // namespace foxopt::stats
