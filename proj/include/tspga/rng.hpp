#pragma once

/// @file rng.hpp
/// @brief Seeded random streams shared by every stochastic component.

#include <cstdint>
#include <random>

namespace tspga {

using Rng = std::mt19937_64;

/// Named sub-streams derived from one root seed. Each consumer draws from its
/// own stream so that adding draws in one place leaves the others untouched.
enum class Stream : std::uint32_t {
    kInit = 1,
    kSelection = 2,
    kCrossover = 3,
    kMutation = 4,
};

[[nodiscard]] inline Rng make_stream(std::uint64_t seed, Stream stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), 0x9e3779b9U};
    return Rng(seq);
}

/// Uniform integer in [lo, hi].
[[nodiscard]] inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Uniform real in [lo, hi).
[[nodiscard]] inline double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace tspga
