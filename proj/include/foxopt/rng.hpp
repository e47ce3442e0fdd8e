#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace foxopt {

using Vec = std::vector<double>;

/// Deterministic pseudo-random stream. One stream per trial; never shared
/// across threads. Identical seeds produce identical draw sequences, which is
/// what makes whole runs bit-reproducible.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Draw in [0, 1) with 53 random mantissa bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Draw in [lo, hi); returns lo when the range is degenerate.
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller (consumes exactly two unit draws).
    double normal();

    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

/// n independent draws in [lo, hi). Throws std::invalid_argument when
/// lo > hi or n == 0.
Vec uniform(RngStream& rng, double lo, double hi, std::size_t n);

/// n heavy-tailed steps from a Levy-stable generator with stability index 1.5
/// (Mantegna's construction). Entries carry either sign and are unbounded.
/// Throws std::invalid_argument when n == 0.
Vec levy_flight(RngStream& rng, std::size_t n);

} // namespace foxopt
