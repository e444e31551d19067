#include "tspga/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "tspga/rng.hpp"

namespace tspga {

double euclidean(const Point& a, const Point& b, Metric metric) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double raw = std::sqrt(dx * dx + dy * dy);
    // std::round is half-away-from-zero, which is TSPLIB's nint for non-negative values.
    return metric == Metric::kRoundedEuc2d ? std::round(raw) : raw;
}

Instance::Instance(std::string name, std::vector<Point> coords, Metric metric)
    : name_(std::move(name)), metric_(metric), coords_(std::move(coords)) {
    if (metric == Metric::kExplicit) {
        throw std::invalid_argument("coordinate instance cannot use the explicit metric");
    }
    if (coords_.size() < 3) {
        throw std::invalid_argument("instance needs at least 3 cities");
    }
    n_ = static_cast<int>(coords_.size());
    const auto n = static_cast<std::size_t>(n_);
    table_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = euclidean(coords_[i], coords_[j], metric_);
            table_[i * n + j] = v;
            table_[j * n + i] = v;
        }
    }
}

Instance Instance::from_matrix(std::string name, std::size_t n, std::vector<double> table) {
    if (n < 3) {
        throw std::invalid_argument("instance needs at least 3 cities");
    }
    if (table.size() != n * n) {
        throw std::invalid_argument("distance table must be n*n");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i * n + i] != 0.0) {
            throw std::invalid_argument("distance table diagonal must be zero");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i * n + j] < 0.0 || table[i * n + j] != table[j * n + i]) {
                throw std::invalid_argument("distance table must be symmetric and non-negative");
            }
        }
    }
    Instance inst;
    inst.name_ = std::move(name);
    inst.n_ = static_cast<int>(n);
    inst.metric_ = Metric::kExplicit;
    inst.table_ = std::move(table);
    return inst;
}

double Instance::distance(City i, City j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
        throw std::out_of_range("city index out of range");
    }
    return d(i, j);
}

Instance Instance::with_metric(Metric metric) const {
    if (metric_ == Metric::kExplicit) {
        throw std::invalid_argument("explicit-table instance has no coordinates");
    }
    return Instance(name_, coords_, metric);
}

Instance random_instance(int n, unsigned long long seed, double extent, Metric metric) {
    Rng rng(seed);
    std::vector<Point> pts(static_cast<std::size_t>(n < 0 ? 0 : n));
    for (auto& p : pts) {
        p.x = uniform_real(rng, 0.0, extent);
        p.y = uniform_real(rng, 0.0, extent);
    }
    return Instance("random" + std::to_string(n) + "_" + std::to_string(seed), std::move(pts),
                    metric);
}

const char* to_string(Metric metric) noexcept {
    switch (metric) {
        case Metric::kRoundedEuc2d: return "ROUNDED_EUC_2D";
        case Metric::kRawEuc2d: return "RAW_EUC_2D";
        case Metric::kExplicit: return "EXPLICIT";
    }
    return "?";
}

}  // namespace tspga
