#pragma once

/// @file crossover.hpp
/// @brief Permutation crossovers: the Modified and PMX baselines, the two
/// worst-gene cut crossovers, and the elastic-collision crossover.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tspga/gene_analysis.hpp"
#include "tspga/instance.hpp"
#include "tspga/rng.hpp"
#include "tspga/tour.hpp"

namespace tspga {

enum class CrossoverId { kModified, kPmx, kCowgc, kCowlrgc, kCollision };

inline constexpr std::array<CrossoverId, 5> kAllCrossovers = {
    CrossoverId::kModified, CrossoverId::kPmx, CrossoverId::kCowgc, CrossoverId::kCowlrgc,
    CrossoverId::kCollision};

[[nodiscard]] std::string_view to_string(CrossoverId id) noexcept;
[[nodiscard]] std::optional<CrossoverId> parse_crossover(std::string_view name);

struct OffspringPair {
    Tour child1;
    Tour child2;
};

// ---------------------------------------------------------------------------
// Modified (one-point order-preserving) crossover

/// child1 = p1[0, cut) then the remaining cities in p2's order; child2 symmetric.
/// Requires 1 <= cut < n.
[[nodiscard]] OffspringPair modified_crossover(const Tour& p1, const Tour& p2, int cut);

/// Head of `head` before `cut`, filled with the rest of `donor` in donor order.
[[nodiscard]] std::vector<City> modified_child(std::span<const City> head,
                                               std::span<const City> donor, int cut);

// ---------------------------------------------------------------------------
// Partially matched crossover

/// Child carrying `section_parent`'s genes on [cut1, cut2) and `base`'s genes
/// elsewhere, repeats resolved by following the section mapping. Works on any
/// permutation of 0..n-1, fixed start or not.
[[nodiscard]] std::vector<City> pmx_child(std::span<const City> section_parent,
                                          std::span<const City> base, int cut1, int cut2);

/// child1 holds p2's section, child2 holds p1's. Requires 1 <= cut1 < cut2 <= n.
[[nodiscard]] OffspringPair pmx(const Tour& p1, const Tour& p2, int cut1, int cut2);

// ---------------------------------------------------------------------------
// Cut-on-worst-gene crossovers

struct CutPoint {
    int position = 0;         ///< first replaced position
    bool from_first = false;  ///< true when the cut comes from p1
    double score = 0.0;
};

/// Cut of the parent whose left-edge worst gene is worse; ties go to p2.
[[nodiscard]] CutPoint cowgc_cut(const Instance& inst, const Tour& p1, const Tour& p2,
                                 Direction dir = Direction::kMinimize);
/// Same using the left+right worst gene.
[[nodiscard]] CutPoint cowlrgc_cut(const Instance& inst, const Tour& p1, const Tour& p2,
                                   Direction dir = Direction::kMinimize);

/// Modified crossover at the cowgc cut. child1 keeps the head of the parent
/// that owns the cut, child2 the head of the other parent.
[[nodiscard]] OffspringPair cowgc(const Instance& inst, const Tour& p1, const Tour& p2,
                                  Direction dir = Direction::kMinimize);
[[nodiscard]] OffspringPair cowlrgc(const Instance& inst, const Tour& p1, const Tour& p2,
                                    Direction dir = Direction::kMinimize);

// ---------------------------------------------------------------------------
// Collision crossover

struct Velocities {
    double v1 = 0.0;
    double v2 = 0.0;
};

/// Velocities after a 1-D head-on elastic collision. Masses must be positive.
[[nodiscard]] Velocities collision_velocities(double m1, double v1, double m2, double v2);

/// Deterministic core: p1 travels at `v1` (> 0), p2 at `v2` (< 0). Gene i of
/// p1 meets gene i of p2, each weighted by its gene mass. A gene stays in its
/// child when it bounces back or stops; the gaps are refilled from the other
/// parent in that parent's order.
[[nodiscard]] OffspringPair collision_crossover_with(const Instance& inst, const Tour& p1,
                                                     const Tour& p2, double v1, double v2);

/// Draws v1 from [1, cost(p1)] and -v2 from [1, cost(p2)], then collides.
[[nodiscard]] OffspringPair collision_crossover(const Instance& inst, const Tour& p1,
                                                const Tour& p2, Rng& rng);

// ---------------------------------------------------------------------------

/// Applies `id`, drawing random cut points for Modified and PMX.
[[nodiscard]] OffspringPair apply_crossover(CrossoverId id, const Instance& inst, const Tour& p1,
                                            const Tour& p2, Rng& rng);

}  // namespace tspga
