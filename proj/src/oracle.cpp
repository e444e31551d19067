#include "tspga/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tspga {

OptimalTour brute_force_optimal(const Instance& inst) {
    const int n = inst.size();
    if (n > kMaxBruteForceCities) {
        throw std::invalid_argument("brute force refuses " + std::to_string(n) +
                                    " cities (limit " + std::to_string(kMaxBruteForceCities) +
                                    ")");
    }
    std::vector<City> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    std::vector<City> best;
    double best_cost = 0.0;
    // next_permutation walks lexicographically, so strict < keeps the smallest tie.
    do {
        if (order[1] > order.back()) continue;
        const double c = tour_cost(inst, order);
        if (best.empty() || c < best_cost) {
            best = order;
            best_cost = c;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return {Tour(std::move(best)), best_cost};
}

}  // namespace tspga
