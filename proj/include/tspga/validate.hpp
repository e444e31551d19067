#pragma once

/// @file validate.hpp
/// @brief Randomised property checks run against every operator.

#include <cstdint>
#include <string>
#include <vector>

namespace tspga {

struct ValidationOptions {
    int trials = 10000;  ///< per operator
    int min_cities = 4;
    int max_cities = 60;
    std::uint64_t seed = 1;
};

struct OperatorCheck {
    std::string op;
    int trials = 0;
    int failures = 0;
    std::string first_failure;  ///< empty when failures == 0
};

/// Every crossover child and mutation output must be a valid fixed-start
/// permutation, and deterministic mutations must repeat themselves.
[[nodiscard]] std::vector<OperatorCheck> validate_operators(const ValidationOptions& opts);

}  // namespace tspga
