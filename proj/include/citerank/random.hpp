#pragma once

// Seedable generator with platform-independent output. std::mt19937_64's
// sequence is fixed by the standard; the std distributions are not, so the
// transforms live here.

#include <cstdint>
#include <random>

namespace citerank {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for stream `stream` of a run started with `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal (Box-Muller).
    double normal();

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace citerank
