#include "citerank/random.hpp"

#include <cmath>
#include <numbers>

namespace citerank {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // reject the low residue class so r % bound is unbiased
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const auto r = next();
        if (r >= threshold) return r % bound;
    }
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace citerank
