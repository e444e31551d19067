#pragma once

/// @file tour.hpp
/// @brief Fixed-start path representation of a tour and its cost.
///
/// A tour is stored open, as a permutation of 0..n-1 whose first entry is
/// always city 0, and is costed as a closed cycle.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tspga/instance.hpp"

namespace tspga {

class Tour {
public:
    Tour() = default;
    explicit Tour(std::vector<City> order) : order_(std::move(order)) {}

    /// The identity tour 0, 1, ..., n-1.
    static Tour identity(int n);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(order_.size()); }
    [[nodiscard]] City operator[](int pos) const noexcept {
        return order_[static_cast<std::size_t>(pos)];
    }
    [[nodiscard]] std::span<const City> cities() const noexcept { return order_; }
    [[nodiscard]] std::vector<City>& mutable_cities() noexcept { return order_; }

    /// Position of `city` in the tour; linear scan.
    [[nodiscard]] int position_of(City city) const;

    friend bool operator==(const Tour&, const Tour&) = default;

private:
    std::vector<City> order_;
};

struct TourHash {
    std::size_t operator()(const Tour& t) const noexcept;
};

[[nodiscard]] double tour_cost(const Instance& inst, const Tour& t);
[[nodiscard]] double tour_cost(const Instance& inst, std::span<const City> order);

/// Which invariant a tour breaks. Empty report means the tour is valid.
struct TourViolation {
    enum class Kind { kWrongLength, kCityOutOfRange, kDuplicateCity, kMissingCity, kFixedStart };
    Kind kind;
    City city = -1;  ///< offending city where meaningful
    std::string message;
};

[[nodiscard]] std::vector<TourViolation> validate_tour(const Instance& inst, const Tour& t);
[[nodiscard]] std::vector<TourViolation> validate_tour(int n, std::span<const City> order);
[[nodiscard]] bool is_valid_tour(int n, std::span<const City> order);

/// Tour with its cost cached at construction. The cached cost can only be
/// produced by evaluating the tour, so the two never drift apart.
class EvaluatedTour {
public:
    EvaluatedTour(const Instance& inst, Tour tour);

    [[nodiscard]] const Tour& tour() const noexcept { return tour_; }
    [[nodiscard]] double cost() const noexcept { return cost_; }

private:
    Tour tour_;
    double cost_ = 0.0;
};

/// Sorts by cost ascending; stable so equal-cost members keep their order.
void sort_by_cost(std::vector<EvaluatedTour>& members);

[[nodiscard]] std::string to_string(const Tour& t);

}  // namespace tspga
