#pragma once

/// @file ga.hpp
/// @brief Generational loop: tournament selection, crossover, mutation and
/// merge-sort-truncate replacement.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tspga/crossover.hpp"
#include "tspga/instance.hpp"
#include "tspga/mutation.hpp"
#include "tspga/rng.hpp"
#include "tspga/strategies.hpp"
#include "tspga/tour.hpp"

namespace tspga {

/// A single crossover operator or one of the two crossover strategies.
struct CrossoverChoice {
    enum class Kind { kOperator, kSbc, kSac };
    Kind kind = Kind::kOperator;
    CrossoverId op = CrossoverId::kModified;

    static CrossoverChoice of(CrossoverId id) { return {Kind::kOperator, id}; }
    static CrossoverChoice best() { return {Kind::kSbc, CrossoverId::kModified}; }
    static CrossoverChoice any() { return {Kind::kSac, CrossoverId::kModified}; }
    friend bool operator==(const CrossoverChoice&, const CrossoverChoice&) = default;
};

/// No mutation, a single mutation operator, or one of the two mutation strategies.
struct MutationChoice {
    enum class Kind { kNone, kOperator, kSbm, kSam };
    Kind kind = Kind::kNone;
    MutationId op = MutationId::kExchange;

    static MutationChoice none() { return {}; }
    static MutationChoice of(MutationId id) { return {Kind::kOperator, id}; }
    static MutationChoice best() { return {Kind::kSbm, MutationId::kExchange}; }
    static MutationChoice any() { return {Kind::kSam, MutationId::kExchange}; }
    friend bool operator==(const MutationChoice&, const MutationChoice&) = default;
};

[[nodiscard]] std::string to_string(const CrossoverChoice& c);
[[nodiscard]] std::string to_string(const MutationChoice& m);
/// Accepts an operator name, "sbc" or "sac".
[[nodiscard]] std::optional<CrossoverChoice> parse_crossover_choice(std::string_view name);
/// Accepts an operator name, "sbm", "sam" or "none".
[[nodiscard]] std::optional<MutationChoice> parse_mutation_choice(std::string_view name);

enum class Replacement {
    kElitist,           ///< merge parents and children, keep the best P
    kGenerationalElite, ///< children replace parents except the single best parent
};

/// When SAC/SAM pick their operator.
enum class StrategyDraw { kPerInvocation, kPerGeneration };

struct GAConfig {
    int population_size = 100;
    int max_generations = 2000;
    double crossover_rate = 0.83;  ///< fraction of P produced by crossover each generation
    double mutation_rate = 0.02;   ///< fraction of P mutated each generation
    CrossoverChoice crossover = CrossoverChoice::of(CrossoverId::kModified);
    MutationChoice mutation = MutationChoice::of(MutationId::kExchange);
    int tournament_size = 2;
    std::uint64_t seed = 1;
    Metric metric = Metric::kRoundedEuc2d;  ///< metric used when loading instances for this run
    Replacement replacement = Replacement::kElitist;
    StrategyDraw strategy_draw = StrategyDraw::kPerInvocation;
    CrossoverPortfolio crossover_portfolio;
    MutationPortfolio mutation_portfolio;
    bool log_operators = false;
};

/// Throws std::invalid_argument describing the first bad field.
void validate_config(const GAConfig& cfg);

[[nodiscard]] int crossover_count(const GAConfig& cfg);
[[nodiscard]] int mutation_count(const GAConfig& cfg);

struct Population {
    std::vector<EvaluatedTour> members;  ///< sorted by cost ascending
};

struct ConvergenceRecord {
    int generation = 0;
    double best_cost = 0.0;
    double mean_cost = 0.0;
    friend bool operator==(const ConvergenceRecord&, const ConvergenceRecord&) = default;
};

struct OperatorUsage {
    int generation = 0;
    std::string strategy;
    std::string op;
    double child_cost = 0.0;
};

/// Receives progress as a run executes. Both hooks default to no-ops.
class RunObserver {
public:
    virtual ~RunObserver() = default;
    virtual void on_generation(const ConvergenceRecord& /*record*/) {}
    virtual void on_operator(const OperatorUsage& /*usage*/) {}
};

struct RunResult {
    EvaluatedTour best;
    std::vector<ConvergenceRecord> history;
    std::vector<OperatorUsage> usage;  ///< filled when GAConfig::log_operators is set
    double evolve_seconds = 0.0;       ///< wall time of the generation loop only
};

/// Independent random streams of one run.
struct RunStreams {
    Rng init;
    Rng selection;
    Rng crossover;
    Rng mutation;

    explicit RunStreams(std::uint64_t seed)
        : init(make_stream(seed, Stream::kInit)),
          selection(make_stream(seed, Stream::kSelection)),
          crossover(make_stream(seed, Stream::kCrossover)),
          mutation(make_stream(seed, Stream::kMutation)) {}
};

[[nodiscard]] Tour random_tour(int n, Rng& rng);
[[nodiscard]] Population init_population(const Instance& inst, int size, Rng& rng);

/// Index of the winner of a tournament among k distinct members drawn
/// uniformly (population is sorted, so the smallest drawn index wins).
[[nodiscard]] int tournament(const Population& pop, int k, Rng& rng);
[[nodiscard]] std::pair<int, int> select_parents(const Population& pop, int k, Rng& rng);

[[nodiscard]] ConvergenceRecord summarize(const Population& pop, int generation);

/// One generation. `usage` and `observer` may be null.
[[nodiscard]] Population evolve_generation(const Instance& inst, const GAConfig& cfg,
                                           const Population& pop, RunStreams& streams,
                                           int generation,
                                           std::vector<OperatorUsage>* usage = nullptr,
                                           RunObserver* observer = nullptr);

[[nodiscard]] RunResult run(const GAConfig& cfg, const Instance& inst,
                            RunObserver* observer = nullptr);

}  // namespace tspga
