#include "tspga/tour.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tspga {

Tour Tour::identity(int n) {
    std::vector<City> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return Tour(std::move(order));
}

int Tour::position_of(City city) const {
    const auto it = std::find(order_.begin(), order_.end(), city);
    if (it == order_.end()) {
        throw std::invalid_argument("city not in tour");
    }
    return static_cast<int>(it - order_.begin());
}

std::size_t TourHash::operator()(const Tour& t) const noexcept {
    // FNV-1a over the city sequence.
    std::size_t h = 1469598103934665603ULL;
    for (City c : t.cities()) {
        h ^= static_cast<std::size_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

double tour_cost(const Instance& inst, std::span<const City> order) {
    if (order.empty()) {
        return 0.0;
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        total += inst.d(order[i], order[i + 1]);
    }
    return total + inst.d(order.back(), order.front());
}

double tour_cost(const Instance& inst, const Tour& t) { return tour_cost(inst, t.cities()); }

std::vector<TourViolation> validate_tour(int n, std::span<const City> order) {
    std::vector<TourViolation> out;
    if (static_cast<int>(order.size()) != n) {
        out.push_back({TourViolation::Kind::kWrongLength, -1,
                       "wrong length: " + std::to_string(order.size()) + " != " +
                           std::to_string(n)});
    }
    if (!order.empty() && order.front() != 0) {
        out.push_back({TourViolation::Kind::kFixedStart, order.front(),
                       "fixed start violated: position 0 holds city " +
                           std::to_string(order.front())});
    }
    std::vector<int> seen(static_cast<std::size_t>(n > 0 ? n : 0), 0);
    for (City c : order) {
        if (c < 0 || c >= n) {
            out.push_back({TourViolation::Kind::kCityOutOfRange, c,
                           "city out of range: " + std::to_string(c)});
            continue;
        }
        if (++seen[static_cast<std::size_t>(c)] == 2) {
            out.push_back({TourViolation::Kind::kDuplicateCity, c,
                           "duplicate city: " + std::to_string(c)});
        }
    }
    for (int c = 0; c < n; ++c) {
        if (seen[static_cast<std::size_t>(c)] == 0) {
            out.push_back({TourViolation::Kind::kMissingCity, c,
                           "missing city: " + std::to_string(c)});
        }
    }
    return out;
}

std::vector<TourViolation> validate_tour(const Instance& inst, const Tour& t) {
    return validate_tour(inst.size(), t.cities());
}

bool is_valid_tour(int n, std::span<const City> order) {
    if (static_cast<int>(order.size()) != n || order.empty() || order.front() != 0) {
        return false;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (City c : order) {
        if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)]) {
            return false;
        }
        seen[static_cast<std::size_t>(c)] = 1;
    }
    return true;
}

EvaluatedTour::EvaluatedTour(const Instance& inst, Tour tour)
    : tour_(std::move(tour)), cost_(tour_cost(inst, tour_)) {}

void sort_by_cost(std::vector<EvaluatedTour>& members) {
    std::stable_sort(members.begin(), members.end(),
                     [](const EvaluatedTour& a, const EvaluatedTour& b) {
                         return a.cost() < b.cost();
                     });
}

std::string to_string(const Tour& t) {
    std::ostringstream os;
    for (int i = 0; i < t.size(); ++i) {
        if (i) os << ' ';
        os << t[i];
    }
    return os.str();
}

}  // namespace tspga
