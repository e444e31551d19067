#include "tspga/gene_analysis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tspga {
namespace {

void require_min_size(const Tour& t) {
    if (t.size() < 3) throw std::invalid_argument("worst-gene search needs n >= 3");
}

// True when `candidate` is strictly worse than `current` for the direction.
bool worse(double candidate, double current, Direction dir) {
    return dir == Direction::kMinimize ? candidate > current : candidate < current;
}

}  // namespace

GeneScore worst_gene_left(const Instance& inst, const Tour& t, Direction dir) {
    require_min_size(t);
    const int n = t.size();
    GeneScore best{1, inst.d(t[0], t[1])};
    for (int k = 1; k + 1 < n; ++k) {
        const double s = inst.d(t[k], t[k + 1]);
        if (worse(s, best.score, dir)) best = {k + 1, s};
    }
    return best;
}

double gene_mass(const Instance& inst, const Tour& t, int pos) {
    const int n = t.size();
    if (pos < 0 || pos >= n) throw std::out_of_range("gene position out of range");
    const int left = pos == 0 ? n - 1 : pos - 1;
    const int right = pos + 1 == n ? 0 : pos + 1;
    return inst.d(t[left], t[pos]) + inst.d(t[pos], t[right]);
}

GeneScore worst_gene_lr(const Instance& inst, const Tour& t, Direction dir) {
    require_min_size(t);
    const int n = t.size();
    GeneScore best{1, gene_mass(inst, t, 1)};
    for (int p = 2; p < n; ++p) {
        const double s = gene_mass(inst, t, p);
        if (worse(s, best.score, dir)) best = {p, s};
    }
    return best;
}

std::pair<GeneScore, GeneScore> two_worst_genes_left(const Instance& inst, const Tour& t,
                                                     Direction dir) {
    require_min_size(t);
    const int n = t.size();
    const double sentinel = dir == Direction::kMinimize ? -std::numeric_limits<double>::infinity()
                                                        : std::numeric_limits<double>::infinity();
    GeneScore first{-1, sentinel};
    GeneScore second{-1, sentinel};
    for (int k = 0; k + 1 < n; ++k) {
        const GeneScore g{k + 1, inst.d(t[k], t[k + 1])};
        if (first.index < 0 || worse(g.score, first.score, dir)) {
            second = first;
            first = g;
        } else if (second.index < 0 || worse(g.score, second.score, dir)) {
            second = g;
        }
    }
    return {first, second};
}

City nearest_city(const Instance& inst, City city, std::span<const City> exclude) {
    if (city < 0 || city >= inst.size()) throw std::out_of_range("city index out of range");
    City best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (City j = 0; j < inst.size(); ++j) {
        if (j == city || std::find(exclude.begin(), exclude.end(), j) != exclude.end()) continue;
        const double dj = inst.d(city, j);
        if (dj < best_d) {
            best_d = dj;
            best = j;
        }
    }
    if (best < 0) throw std::invalid_argument("nearest_city: no candidate city");
    return best;
}

}  // namespace tspga
