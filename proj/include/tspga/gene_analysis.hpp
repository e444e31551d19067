#pragma once

/// @file gene_analysis.hpp
/// @brief Worst-gene, nearest-neighbour and gene-mass primitives.
///
/// The "worst gene" of a tour is the city contributing most to its cost. Two
/// flavours exist: the left-edge flavour scores a city by the edge arriving
/// from its left neighbour, the L+R flavour by the sum of both incident edges
/// (circular at the tour extremes). Position 0 holds the fixed start city and
/// is never reported as worst. Ties always go to the smallest index.

#include <span>
#include <utility>

#include "tspga/instance.hpp"
#include "tspga/tour.hpp"

namespace tspga {

enum class Direction { kMinimize, kMaximize };

struct GeneScore {
    int index = 0;     ///< position in the tour
    double score = 0;  ///< distance contribution
    friend bool operator==(const GeneScore&, const GeneScore&) = default;
};

/// Right endpoint of the longest open edge (order[k], order[k+1]), k in [0, n-2].
/// Under kMaximize the shortest edge is used instead.
[[nodiscard]] GeneScore worst_gene_left(const Instance& inst, const Tour& t,
                                        Direction dir = Direction::kMinimize);

/// Position in [1, n-1] with the largest left+right distance sum (circular neighbours).
[[nodiscard]] GeneScore worst_gene_lr(const Instance& inst, const Tour& t,
                                      Direction dir = Direction::kMinimize);

/// The two distinct positions with the largest left-edge scores, smaller
/// score-rank first. Ties resolve to smaller positions.
[[nodiscard]] std::pair<GeneScore, GeneScore> two_worst_genes_left(
    const Instance& inst, const Tour& t, Direction dir = Direction::kMinimize);

/// Closest city to `city` that is neither `city` nor in `exclude`.
/// Throws std::invalid_argument if no candidate remains.
[[nodiscard]] City nearest_city(const Instance& inst, City city,
                                std::span<const City> exclude = {});

/// Sum of the distances from the gene at `pos` to its circular neighbours.
[[nodiscard]] double gene_mass(const Instance& inst, const Tour& t, int pos);

}  // namespace tspga
