#pragma once

/// @file oracle.hpp
/// @brief Exhaustive optimum for small instances.

#include "tspga/instance.hpp"
#include "tspga/tour.hpp"

namespace tspga {

inline constexpr int kMaxBruteForceCities = 11;

struct OptimalTour {
    Tour tour;
    double cost = 0.0;
};

/// Enumerates every fixed-start tour once per direction (order[1] < order[n-1]).
/// Equal-cost tours resolve to the lexicographically smallest.
/// Throws std::invalid_argument when n exceeds kMaxBruteForceCities.
[[nodiscard]] OptimalTour brute_force_optimal(const Instance& inst);

}  // namespace tspga
