#pragma once

/// @file instance.hpp
/// @brief Symmetric TSP problem instances and the distance metrics they use.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tspga {

/// City index, 0-based.
using City = int;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

enum class Metric {
    kRoundedEuc2d,  ///< Euclidean distance rounded to the nearest integer (TSPLIB EUC_2D).
    kRawEuc2d,      ///< Plain Euclidean distance.
    kExplicit,      ///< Distances given as a full symmetric table.
};

/// Immutable problem definition. Distances are precomputed into a dense
/// n x n table at construction, so the object is cheap to query from many
/// threads at once.
class Instance {
public:
    Instance(std::string name, std::vector<Point> coords, Metric metric = Metric::kRoundedEuc2d);

    /// Builds an instance from an explicit symmetric distance table given
    /// row-major. Diagonal entries must be zero.
    static Instance from_matrix(std::string name, std::size_t n, std::vector<double> table);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] int size() const noexcept { return n_; }
    [[nodiscard]] Metric metric() const noexcept { return metric_; }
    [[nodiscard]] std::span<const Point> coords() const noexcept { return coords_; }

    /// Bounds-checked distance; throws std::out_of_range on a bad index.
    [[nodiscard]] double distance(City i, City j) const;

    /// Unchecked distance for inner loops.
    [[nodiscard]] double d(City i, City j) const noexcept {
        return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(j)];
    }

    /// Same coordinates, different metric. Explicit-table instances cannot be re-metered.
    [[nodiscard]] Instance with_metric(Metric metric) const;

private:
    Instance() = default;

    std::string name_;
    int n_ = 0;
    Metric metric_ = Metric::kRoundedEuc2d;
    std::vector<Point> coords_;
    std::vector<double> table_;
};

/// Euclidean distance between two points under the given coordinate metric.
[[nodiscard]] double euclidean(const Point& a, const Point& b, Metric metric);

/// Uniformly random cities in [0, extent)^2.
[[nodiscard]] Instance random_instance(int n, unsigned long long seed, double extent = 1000.0,
                                       Metric metric = Metric::kRoundedEuc2d);

[[nodiscard]] const char* to_string(Metric metric) noexcept;

}  // namespace tspga
