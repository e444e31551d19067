#pragma once

/// @file bench.hpp
/// @brief Experiment presets, instance resolution and result tables.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tspga/ga.hpp"
#include "tspga/instance.hpp"

namespace tspga {

/// One column of a table: a crossover choice paired with a mutation choice.
struct Combination {
    std::string label;
    CrossoverChoice crossover;
    MutationChoice mutation;
};

struct Preset {
    std::string name;
    int population_size = 100;
    int max_generations = 2000;
    double crossover_rate = 1.0;
    double mutation_rate = 0.0;
    std::vector<Combination> combinations;
    std::vector<std::string> instances;
};

/// Names accepted by find_preset: "3.1", "3.2", "4.1", "4.2", "5.1".
[[nodiscard]] std::vector<std::string> preset_names();
[[nodiscard]] std::optional<Preset> find_preset(std::string_view name);

/// Published optimum for a TSPLIB instance name, if known.
[[nodiscard]] std::optional<double> known_optimum(std::string_view instance);

inline constexpr std::string_view kTsplibDirEnv = "TSPLIB_DIR";

/// Directory used when none is given: $TSPLIB_DIR if set, else `fallback`.
[[nodiscard]] std::filesystem::path default_tsplib_dir(const std::filesystem::path& fallback);

/// Resolves `random:N:SEED`, an existing file path, or a bare TSPLIB name
/// looked up as `<dir>/<name>.tsp`. Throws std::runtime_error when not found.
[[nodiscard]] Instance resolve_instance(std::string_view spec, const std::filesystem::path& dir,
                                        Metric metric = Metric::kRoundedEuc2d);

struct ExperimentSpec {
    Preset preset;
    std::vector<std::string> instances;  ///< empty means the preset's list
    int runs = 5;
    std::uint64_t base_seed = 1;         ///< run k uses base_seed + k
    double scale = 1.0;                  ///< multiplies generations only
    std::filesystem::path tsplib_dir;
    std::optional<std::filesystem::path> convergence_dir;
    bool include_rat783 = false;
    Metric metric = Metric::kRoundedEuc2d;
};

void validate_spec(const ExperimentSpec& spec);

/// Generations after scaling, never below 1.
[[nodiscard]] int scaled_generations(const ExperimentSpec& spec);

struct ResultRow {
    std::string instance;
    int cities = 0;
    std::string combination;
    std::vector<double> best_costs;  ///< one per seed, in seed order
    double median = 0.0;
    std::optional<double> optimum;
};

struct ResultTable {
    int runs = 0;
    std::vector<ResultRow> rows;
    std::vector<std::string> skipped;  ///< instances that could not be loaded
};

[[nodiscard]] double median(std::vector<double> values);

/// Called after each finished run with (instance, combination, seed, result).
using RunCallback = std::function<void(const Instance&, const Combination&, std::uint64_t,
                                       const RunResult&)>;

[[nodiscard]] ResultTable run_experiment(const ExperimentSpec& spec,
                                         const RunCallback& on_run = {});

/// Wide CSV: `instance,cities,combination,seed_1..seed_R,median,optimum`.
/// Throws std::logic_error if a best cost undercuts the row's known optimum.
void write_result_table(std::ostream& out, const ResultTable& table);
void write_result_table(const std::filesystem::path& path, const ResultTable& table);

}  // namespace tspga
