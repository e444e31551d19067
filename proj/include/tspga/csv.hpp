#pragma once

/// @file csv.hpp
/// @brief Locale-independent CSV writers for run histories and operator logs.

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "tspga/ga.hpp"

namespace tspga {

/// Fixed notation with six decimals and a '.' separator regardless of locale.
[[nodiscard]] std::string format_fixed6(double value);

/// `generation,best_cost,mean_cost`, one row per record. Throws
/// std::invalid_argument on an empty history.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRecord>& history);
void write_convergence_csv(const std::filesystem::path& path,
                           const std::vector<ConvergenceRecord>& history);

/// Inverse of write_convergence_csv. Throws std::runtime_error on malformed input.
[[nodiscard]] std::vector<ConvergenceRecord> read_convergence_csv(std::istream& in);
[[nodiscard]] std::vector<ConvergenceRecord> read_convergence_csv(
    const std::filesystem::path& path);

/// `generation,strategy,operator,child_cost`.
void write_usage_csv(std::ostream& out, const std::vector<OperatorUsage>& usage);
void write_usage_csv(const std::filesystem::path& path, const std::vector<OperatorUsage>& usage);

}  // namespace tspga
