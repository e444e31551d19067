#pragma once

/// @file strategies.hpp
/// @brief Multi-operator strategies: best-of-portfolio (SBC, SBM) and
/// uniformly-random-from-portfolio (SAC, SAM).

#include <optional>
#include <unordered_set>
#include <vector>

#include "tspga/crossover.hpp"
#include "tspga/mutation.hpp"
#include "tspga/rng.hpp"
#include "tspga/tour.hpp"

namespace tspga {

using TourSet = std::unordered_set<Tour, TourHash>;

/// Ordered, duplicate-free, non-empty list of crossovers.
class CrossoverPortfolio {
public:
    /// COWGC, COWLRGC, Collision.
    CrossoverPortfolio();
    explicit CrossoverPortfolio(std::vector<CrossoverId> ops);
    [[nodiscard]] const std::vector<CrossoverId>& ops() const noexcept { return ops_; }
    [[nodiscard]] CrossoverId draw(Rng& rng) const;

private:
    std::vector<CrossoverId> ops_;
};

/// Ordered, duplicate-free, non-empty list of mutations.
class MutationPortfolio {
public:
    /// The ten guided mutations.
    MutationPortfolio();
    explicit MutationPortfolio(std::vector<MutationId> ops);
    [[nodiscard]] const std::vector<MutationId>& ops() const noexcept { return ops_; }
    [[nodiscard]] MutationId draw(Rng& rng) const;

private:
    std::vector<MutationId> ops_;
};

struct CrossoverChild {
    EvaluatedTour child;
    CrossoverId op;
};

struct MutationChild {
    EvaluatedTour child;
    MutationId op;
};

/// Applies every portfolio crossover to (p1, p2), pools the children and
/// returns the cheapest two whose tours are absent from `population` and
/// from each other. Cost ties keep pool order (portfolio order, child1 first).
[[nodiscard]] std::vector<CrossoverChild> sbc(const Instance& inst, const Tour& p1,
                                              const Tour& p2,
                                              const CrossoverPortfolio& portfolio,
                                              const TourSet& population, Rng& rng);

struct SacResult {
    CrossoverId op;
    OffspringPair children;
};

/// Applies one uniformly drawn portfolio crossover.
[[nodiscard]] SacResult sac(const Instance& inst, const Tour& p1, const Tour& p2,
                            const CrossoverPortfolio& portfolio, Rng& rng);

/// Applies every portfolio mutation to `c` (randomised members draw from
/// `rng` in portfolio order) and returns the cheapest child not in `population`.
[[nodiscard]] std::optional<MutationChild> sbm(const Instance& inst, const EvaluatedTour& c,
                                               const MutationPortfolio& portfolio,
                                               const TourSet& population, Rng& rng);

/// Applies one uniformly drawn portfolio mutation.
[[nodiscard]] MutationChild sam(const Instance& inst, const EvaluatedTour& c,
                                const MutationPortfolio& portfolio, Rng& rng);

}  // namespace tspga
