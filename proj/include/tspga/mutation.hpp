#pragma once

/// @file mutation.hpp
/// @brief Permutation mutations: the Exchange and Rearrangement baselines and
/// ten worst-gene / nearest-neighbour guided operators.
///
/// Every operator keeps city 0 at position 0 and never picks position 0 at
/// random. Tours shorter than 4 cities come back unchanged. Randomised
/// operators are split into a deterministic `*_at` / `*_with` core taking the
/// random choices explicitly, and a wrapper drawing them from an Rng.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tspga/instance.hpp"
#include "tspga/rng.hpp"
#include "tspga/tour.hpp"

namespace tspga {

enum class MutationId {
    kExchange,
    kRearrangement,
    kWgwrgm,    ///< worst gene with random gene
    kWgwwgm,    ///< worst gene with worst gene
    kWlrgwrgm,  ///< worst L+R gene with random gene
    kWgwnnm,    ///< worst gene with nearest neighbour
    kWgwwnnm,   ///< worst gene with the worst around the nearest neighbour
    kWgibnnm,   ///< worst gene inserted beside nearest neighbour
    kRgibnnm,   ///< random gene inserted beside nearest neighbour
    kSwglm,     ///< swap worst gene locally
    kIbrgbwgm,  ///< insert best random gene before worst gene
    kIbrgbrgm,  ///< insert best random gene before random gene
};

inline constexpr std::array<MutationId, 12> kAllMutations = {
    MutationId::kExchange, MutationId::kRearrangement, MutationId::kWgwrgm,
    MutationId::kWgwwgm,   MutationId::kWlrgwrgm,      MutationId::kWgwnnm,
    MutationId::kWgwwnnm,  MutationId::kWgibnnm,       MutationId::kRgibnnm,
    MutationId::kSwglm,    MutationId::kIbrgbwgm,      MutationId::kIbrgbrgm};

/// The ten guided operators, in the order the best-mutation strategy applies them.
inline constexpr std::array<MutationId, 10> kGuidedMutations = {
    MutationId::kWgwrgm,  MutationId::kWgwwgm,  MutationId::kWlrgwrgm, MutationId::kWgwnnm,
    MutationId::kWgwwnnm, MutationId::kWgibnnm, MutationId::kRgibnnm,  MutationId::kSwglm,
    MutationId::kIbrgbwgm, MutationId::kIbrgbrgm};

/// Half-width of the circular window around the nearest city's position.
inline constexpr int kNeighbourhoodRadius = 5;
/// Number of random candidates the insert-best-random-gene operators sample.
inline constexpr int kInsertCandidates = 5;

[[nodiscard]] std::string_view to_string(MutationId id) noexcept;
[[nodiscard]] std::optional<MutationId> parse_mutation(std::string_view name);
[[nodiscard]] bool is_deterministic(MutationId id) noexcept;

// Building blocks -----------------------------------------------------------

/// Swaps positions i and j (both in [1, n)).
[[nodiscard]] Tour exchange_mutation(const Tour& t, int i, int j);

/// Removes the city at `from` and reinserts it so it ends up at position `to`.
[[nodiscard]] Tour move_city(const Tour& t, int from, int to);

/// Removes the city at `from` and reinserts it directly before `anchor`
/// (or at the tail when `anchor` is the start city).
[[nodiscard]] Tour insert_before_city(const Tour& t, int from, City anchor);

/// Positions within circular distance `radius` of `center`, excluding
/// `center` and position 0, ascending and without repeats.
[[nodiscard]] std::vector<int> neighbour_window(int n, int center,
                                                int radius = kNeighbourhoodRadius);

// Operators -----------------------------------------------------------------

[[nodiscard]] Tour exchange_mutation(const Tour& t, Rng& rng);

[[nodiscard]] Tour wgwrgm_at(const Instance& inst, const Tour& t, int random_pos);
[[nodiscard]] Tour wgwrgm(const Instance& inst, const Tour& t, Rng& rng);

[[nodiscard]] Tour wgwwgm(const Instance& inst, const Tour& t);

[[nodiscard]] Tour wlrgwrgm_at(const Instance& inst, const Tour& t, int random_pos);
[[nodiscard]] Tour wlrgwrgm(const Instance& inst, const Tour& t, Rng& rng);

/// Worst (L+R) position, its nearest city, and that city's position.
struct NearestContext {
    int worst_pos = 0;
    City nearest = 0;
    int nearest_pos = 0;
};
[[nodiscard]] NearestContext nearest_context(const Instance& inst, const Tour& t);

/// Swaps the worst gene with the gene at `window_pos` (a member of the window
/// around the nearest city).
[[nodiscard]] Tour wgwnnm_at(const Instance& inst, const Tour& t, int window_pos);
[[nodiscard]] Tour wgwnnm(const Instance& inst, const Tour& t, Rng& rng);

[[nodiscard]] Tour wgwwnnm(const Instance& inst, const Tour& t);

[[nodiscard]] Tour wgibnnm(const Instance& inst, const Tour& t);

[[nodiscard]] Tour rgibnnm_at(const Instance& inst, const Tour& t, int moved_pos);
[[nodiscard]] Tour rgibnnm(const Instance& inst, const Tour& t, Rng& rng);

/// The two local-swap children: F1 swaps the two genes left of the worst one,
/// F2 swaps the worst gene with its right neighbour.
[[nodiscard]] std::pair<Tour, Tour> swglm_children(const Instance& inst, const Tour& t);
[[nodiscard]] Tour swglm(const Instance& inst, const Tour& t);

/// Moves whichever candidate position minimises d(c, t[target]) + d(c, t[target-1])
/// so that it sits between those two cities.
[[nodiscard]] Tour insert_best_before(const Instance& inst, const Tour& t, int target,
                                      std::span<const int> candidate_positions);
/// Up to kInsertCandidates distinct positions other than 0, target and target-1.
[[nodiscard]] std::vector<int> draw_insert_candidates(int n, int target, Rng& rng);

[[nodiscard]] Tour ibrgbwgm(const Instance& inst, const Tour& t, Rng& rng);
[[nodiscard]] Tour ibrgbrgm(const Instance& inst, const Tour& t, Rng& rng);

[[nodiscard]] Tour rearrangement(const Instance& inst, const Tour& t);

/// Dispatches to the operator named by `id`.
[[nodiscard]] Tour apply_mutation(MutationId id, const Instance& inst, const Tour& t, Rng& rng);

}  // namespace tspga
