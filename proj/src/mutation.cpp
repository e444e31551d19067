#include "tspga/mutation.hpp"

#include <algorithm>
#include <stdexcept>

#include "tspga/gene_analysis.hpp"

namespace tspga {

std::string_view to_string(MutationId id) noexcept {
    switch (id) {
        case MutationId::kExchange: return "exchange";
        case MutationId::kRearrangement: return "rearrangement";
        case MutationId::kWgwrgm: return "wgwrgm";
        case MutationId::kWgwwgm: return "wgwwgm";
        case MutationId::kWlrgwrgm: return "wlrgwrgm";
        case MutationId::kWgwnnm: return "wgwnnm";
        case MutationId::kWgwwnnm: return "wgwwnnm";
        case MutationId::kWgibnnm: return "wgibnnm";
        case MutationId::kRgibnnm: return "rgibnnm";
        case MutationId::kSwglm: return "swglm";
        case MutationId::kIbrgbwgm: return "ibrgbwgm";
        case MutationId::kIbrgbrgm: return "ibrgbrgm";
    }
    return "?";
}

std::optional<MutationId> parse_mutation(std::string_view name) {
    for (auto id : kAllMutations) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

bool is_deterministic(MutationId id) noexcept {
    switch (id) {
        case MutationId::kRearrangement:
        case MutationId::kWgwwgm:
        case MutationId::kWgwwnnm:
        case MutationId::kWgibnnm:
        case MutationId::kSwglm: return true;
        default: return false;
    }
}

namespace {

constexpr int kMinMutableSize = 4;
constexpr int kMinInsertSize = 7;

void check_position(const Tour& t, int pos) {
    if (pos < 1 || pos >= t.size()) throw std::invalid_argument("position must lie in [1, n)");
}

// Uniform position in [1, n); one redraw if it lands on `avoid`.
int random_partner(Rng& rng, int n, int avoid) {
    int r = uniform_int(rng, 1, n - 1);
    if (r == avoid) r = uniform_int(rng, 1, n - 1);
    return r;
}

}  // namespace

Tour exchange_mutation(const Tour& t, int i, int j) {
    check_position(t, i);
    check_position(t, j);
    Tour out = t;
    std::swap(out.mutable_cities()[static_cast<std::size_t>(i)],
              out.mutable_cities()[static_cast<std::size_t>(j)]);
    return out;
}

Tour exchange_mutation(const Tour& t, Rng& rng) {
    if (t.size() < kMinMutableSize) return t;
    const int i = uniform_int(rng, 1, t.size() - 1);
    const int j = uniform_int(rng, 1, t.size() - 1);
    return exchange_mutation(t, i, j);
}

Tour move_city(const Tour& t, int from, int to) {
    check_position(t, from);
    check_position(t, to);
    Tour out = t;
    auto& v = out.mutable_cities();
    const auto f = v.begin() + from;
    const auto d = v.begin() + to;
    if (from < to) {
        std::rotate(f, f + 1, d + 1);
    } else if (to < from) {
        std::rotate(d, f, f + 1);
    }
    return out;
}

Tour insert_before_city(const Tour& t, int from, City anchor) {
    check_position(t, from);
    std::vector<City> v(t.cities().begin(), t.cities().end());
    const City moved = v[static_cast<std::size_t>(from)];
    if (moved == anchor) throw std::invalid_argument("cannot insert a city before itself");
    v.erase(v.begin() + from);
    const auto it = std::find(v.begin(), v.end(), anchor);
    if (it == v.end()) throw std::invalid_argument("anchor city not in tour");
    if (it == v.begin()) {
        v.push_back(moved);  // circularly, the tail sits just before the start city
    } else {
        v.insert(it, moved);
    }
    return Tour(std::move(v));
}

std::vector<int> neighbour_window(int n, int center, int radius) {
    std::vector<int> out;
    for (int k = -radius; k <= radius; ++k) {
        const int p = ((center + k) % n + n) % n;
        if (p == center || p == 0) continue;
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Tour wgwrgm_at(const Instance& inst, const Tour& t, int random_pos) {
    return exchange_mutation(t, worst_gene_left(inst, t).index, random_pos);
}

Tour wgwrgm(const Instance& inst, const Tour& t, Rng& rng) {
    if (t.size() < kMinMutableSize) return t;
    const int worst = worst_gene_left(inst, t).index;
    return exchange_mutation(t, worst, random_partner(rng, t.size(), worst));
}

Tour wgwwgm(const Instance& inst, const Tour& t) {
    if (t.size() < kMinMutableSize) return t;
    const auto [a, b] = two_worst_genes_left(inst, t);
    return exchange_mutation(t, a.index, b.index);
}

Tour wlrgwrgm_at(const Instance& inst, const Tour& t, int random_pos) {
    return exchange_mutation(t, worst_gene_lr(inst, t).index, random_pos);
}

Tour wlrgwrgm(const Instance& inst, const Tour& t, Rng& rng) {
    if (t.size() < kMinMutableSize) return t;
    const int worst = worst_gene_lr(inst, t).index;
    return exchange_mutation(t, worst, random_partner(rng, t.size(), worst));
}

NearestContext nearest_context(const Instance& inst, const Tour& t) {
    NearestContext ctx;
    ctx.worst_pos = worst_gene_lr(inst, t).index;
    ctx.nearest = nearest_city(inst, t[ctx.worst_pos]);
    ctx.nearest_pos = t.position_of(ctx.nearest);
    return ctx;
}

Tour wgwnnm_at(const Instance& inst, const Tour& t, int window_pos) {
    return exchange_mutation(t, nearest_context(inst, t).worst_pos, window_pos);
}

Tour wgwnnm(const Instance& inst, const Tour& t, Rng& rng) {
    if (t.size() < kMinMutableSize) return t;
    const auto ctx = nearest_context(inst, t);
    const auto window = neighbour_window(t.size(), ctx.nearest_pos);
    if (window.empty()) return t;
    const int pick = window[static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<int>(window.size()) - 1))];
    return exchange_mutation(t, ctx.worst_pos, pick);
}

Tour wgwwnnm(const Instance& inst, const Tour& t) {
    if (t.size() < kMinMutableSize) return t;
    const auto ctx = nearest_context(inst, t);
    const auto window = neighbour_window(t.size(), ctx.nearest_pos);
    if (window.empty()) return t;
    int far = window.front();
    for (int p : window) {
        if (inst.d(t[p], ctx.nearest) > inst.d(t[far], ctx.nearest)) far = p;
    }
    return exchange_mutation(t, ctx.worst_pos, far);
}

Tour wgibnnm(const Instance& inst, const Tour& t) {
    if (t.size() < kMinMutableSize) return t;
    const auto ctx = nearest_context(inst, t);
    return insert_before_city(t, ctx.worst_pos, ctx.nearest);
}

Tour rgibnnm_at(const Instance& inst, const Tour& t, int moved_pos) {
    check_position(t, moved_pos);
    return insert_before_city(t, moved_pos, nearest_city(inst, t[moved_pos]));
}

Tour rgibnnm(const Instance& inst, const Tour& t, Rng& rng) {
    if (t.size() < kMinMutableSize) return t;
    return rgibnnm_at(inst, t, uniform_int(rng, 1, t.size() - 1));
}

std::pair<Tour, Tour> swglm_children(const Instance& inst, const Tour& t) {
    const int n = t.size();
    // Circular neighbours over positions 1..n-1; position 0 is skipped.
    auto left = [n](int p) { return p == 1 ? n - 1 : p - 1; };
    auto right = [n](int p) { return p == n - 1 ? 1 : p + 1; };
    const int w = worst_gene_lr(inst, t).index;
    const int l1 = left(w);
    return {exchange_mutation(t, l1, left(l1)), exchange_mutation(t, w, right(w))};
}

Tour swglm(const Instance& inst, const Tour& t) {
    if (t.size() < kMinMutableSize) return t;
    auto [f1, f2] = swglm_children(inst, t);
    return tour_cost(inst, f1) > tour_cost(inst, f2) ? std::move(f2) : std::move(f1);
}

Tour insert_best_before(const Instance& inst, const Tour& t, int target,
                        std::span<const int> candidate_positions) {
    check_position(t, target);
    if (candidate_positions.empty()) return t;
    const City worst = t[target];
    const City prev = t[target - 1];
    int best = -1;
    double best_score = 0.0;
    for (int p : candidate_positions) {
        check_position(t, p);
        if (p == target || p == target - 1) {
            throw std::invalid_argument("candidate coincides with the insertion point");
        }
        const double s = inst.d(t[p], worst) + inst.d(t[p], prev);
        if (best < 0 || s < best_score) {
            best = p;
            best_score = s;
        }
    }
    // After removing `best`, the worst city shifts left iff it sat to the right.
    const int dest = best < target ? target - 1 : target;
    return move_city(t, best, dest);
}

std::vector<int> draw_insert_candidates(int n, int target, Rng& rng) {
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int p = 1; p < n; ++p) {
        if (p != target && p != target - 1) pool.push_back(p);
    }
    const int k = std::min<int>(kInsertCandidates, static_cast<int>(pool.size()));
    for (int i = 0; i < k; ++i) {
        const int j = uniform_int(rng, i, static_cast<int>(pool.size()) - 1);
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

Tour ibrgbwgm(const Instance& inst, const Tour& t, Rng& rng) {
    if (t.size() < kMinInsertSize) return t;
    const int target = worst_gene_left(inst, t).index;
    return insert_best_before(inst, t, target, draw_insert_candidates(t.size(), target, rng));
}

Tour ibrgbrgm(const Instance& inst, const Tour& t, Rng& rng) {
    if (t.size() < kMinInsertSize) return t;
    const int target = uniform_int(rng, 1, t.size() - 1);
    return insert_best_before(inst, t, target, draw_insert_candidates(t.size(), target, rng));
}

Tour rearrangement(const Instance& inst, const Tour& t) {
    const int n = t.size();
    if (n < kMinMutableSize) return t;
    const int moved = worst_gene_left(inst, t).index;
    Tour best = t;
    double best_cost = tour_cost(inst, t);
    for (int dest : {1, n / 2, n - 1}) {
        Tour candidate = move_city(t, moved, dest);
        const double c = tour_cost(inst, candidate);
        if (c < best_cost) {
            best = std::move(candidate);
            best_cost = c;
        }
    }
    return best;
}

Tour apply_mutation(MutationId id, const Instance& inst, const Tour& t, Rng& rng) {
    if (t.size() < kMinMutableSize) return t;
    switch (id) {
        case MutationId::kExchange: return exchange_mutation(t, rng);
        case MutationId::kRearrangement: return rearrangement(inst, t);
        case MutationId::kWgwrgm: return wgwrgm(inst, t, rng);
        case MutationId::kWgwwgm: return wgwwgm(inst, t);
        case MutationId::kWlrgwrgm: return wlrgwrgm(inst, t, rng);
        case MutationId::kWgwnnm: return wgwnnm(inst, t, rng);
        case MutationId::kWgwwnnm: return wgwwnnm(inst, t);
        case MutationId::kWgibnnm: return wgibnnm(inst, t);
        case MutationId::kRgibnnm: return rgibnnm(inst, t, rng);
        case MutationId::kSwglm: return swglm(inst, t);
        case MutationId::kIbrgbwgm: return ibrgbwgm(inst, t, rng);
        case MutationId::kIbrgbrgm: return ibrgbrgm(inst, t, rng);
    }
    throw std::invalid_argument("unknown mutation");
}

}  // namespace tspga
