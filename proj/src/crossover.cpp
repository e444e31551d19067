#include "tspga/crossover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tspga {

std::string_view to_string(CrossoverId id) noexcept {
    switch (id) {
        case CrossoverId::kModified: return "modified";
        case CrossoverId::kPmx: return "pmx";
        case CrossoverId::kCowgc: return "cowgc";
        case CrossoverId::kCowlrgc: return "cowlrgc";
        case CrossoverId::kCollision: return "collision";
    }
    return "?";
}

std::optional<CrossoverId> parse_crossover(std::string_view name) {
    for (auto id : kAllCrossovers) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

std::vector<City> modified_child(std::span<const City> head, std::span<const City> donor,
                                 int cut) {
    const auto n = head.size();
    std::vector<char> used(n, 0);
    std::vector<City> child;
    child.reserve(n);
    for (int i = 0; i < cut; ++i) {
        child.push_back(head[static_cast<std::size_t>(i)]);
        used[static_cast<std::size_t>(head[static_cast<std::size_t>(i)])] = 1;
    }
    for (City c : donor) {
        if (!used[static_cast<std::size_t>(c)]) child.push_back(c);
    }
    return child;
}

OffspringPair modified_crossover(const Tour& p1, const Tour& p2, int cut) {
    const int n = p1.size();
    if (p2.size() != n) throw std::invalid_argument("parents differ in length");
    if (cut < 1 || cut >= n) throw std::invalid_argument("modified crossover cut out of range");
    return {Tour(modified_child(p1.cities(), p2.cities(), cut)),
            Tour(modified_child(p2.cities(), p1.cities(), cut))};
}

std::vector<City> pmx_child(std::span<const City> section_parent, std::span<const City> base,
                            int cut1, int cut2) {
    const int n = static_cast<int>(base.size());
    if (static_cast<int>(section_parent.size()) != n) {
        throw std::invalid_argument("parents differ in length");
    }
    if (cut1 < 0 || cut1 >= cut2 || cut2 > n) throw std::invalid_argument("invalid PMX cut pair");

    // section_pos[c] = position of city c inside the mapping section, or -1.
    std::vector<int> section_pos(static_cast<std::size_t>(n), -1);
    std::vector<City> child(base.begin(), base.end());
    for (int i = cut1; i < cut2; ++i) {
        const City c = section_parent[static_cast<std::size_t>(i)];
        section_pos[static_cast<std::size_t>(c)] = i;
        child[static_cast<std::size_t>(i)] = c;
    }
    for (int i = 0; i < n; ++i) {
        if (i >= cut1 && i < cut2) continue;
        City v = base[static_cast<std::size_t>(i)];
        while (section_pos[static_cast<std::size_t>(v)] >= 0) {
            v = base[static_cast<std::size_t>(section_pos[static_cast<std::size_t>(v)])];
        }
        child[static_cast<std::size_t>(i)] = v;
    }
    return child;
}

OffspringPair pmx(const Tour& p1, const Tour& p2, int cut1, int cut2) {
    const int n = p1.size();
    if (cut1 < 1 || cut1 >= cut2 || cut2 > n) throw std::invalid_argument("invalid PMX cut pair");
    return {Tour(pmx_child(p2.cities(), p1.cities(), cut1, cut2)),
            Tour(pmx_child(p1.cities(), p2.cities(), cut1, cut2))};
}

namespace {

CutPoint pick_cut(const GeneScore& g1, const GeneScore& g2, Direction dir) {
    const bool first = dir == Direction::kMinimize ? g1.score > g2.score : g1.score < g2.score;
    return first ? CutPoint{g1.index, true, g1.score} : CutPoint{g2.index, false, g2.score};
}

OffspringPair cut_crossover(const Tour& p1, const Tour& p2, const CutPoint& cut) {
    return cut.from_first ? modified_crossover(p1, p2, cut.position)
                          : modified_crossover(p2, p1, cut.position);
}

}  // namespace

CutPoint cowgc_cut(const Instance& inst, const Tour& p1, const Tour& p2, Direction dir) {
    return pick_cut(worst_gene_left(inst, p1, dir), worst_gene_left(inst, p2, dir), dir);
}

CutPoint cowlrgc_cut(const Instance& inst, const Tour& p1, const Tour& p2, Direction dir) {
    return pick_cut(worst_gene_lr(inst, p1, dir), worst_gene_lr(inst, p2, dir), dir);
}

OffspringPair cowgc(const Instance& inst, const Tour& p1, const Tour& p2, Direction dir) {
    return cut_crossover(p1, p2, cowgc_cut(inst, p1, p2, dir));
}

OffspringPair cowlrgc(const Instance& inst, const Tour& p1, const Tour& p2, Direction dir) {
    return cut_crossover(p1, p2, cowlrgc_cut(inst, p1, p2, dir));
}

Velocities collision_velocities(double m1, double v1, double m2, double v2) {
    if (!(m1 > 0.0) || !(m2 > 0.0)) throw std::invalid_argument("collision masses must be > 0");
    if (m1 == m2) return {v2, v1};
    const double total = m1 + m2;
    return {((m1 - m2) * v1 + 2.0 * m2 * v2) / total, (2.0 * m1 * v1 - (m1 - m2) * v2) / total};
}

namespace {

// Zero-mass genes occur when cities share coordinates; two massless genes are
// treated as the equal-mass limit, which swaps the velocities.
Velocities collide_genes(double m1, double v1, double m2, double v2) {
    if (m1 == m2) return {v2, v1};
    const double total = m1 + m2;
    return {((m1 - m2) * v1 + 2.0 * m2 * v2) / total, (2.0 * m1 * v1 - (m1 - m2) * v2) / total};
}

std::vector<City> fill_gaps(std::vector<City> child, std::vector<char> used,
                            std::span<const City> donor) {
    std::size_t next = 0;
    for (auto& slot : child) {
        if (slot >= 0) continue;
        while (used[static_cast<std::size_t>(donor[next])]) ++next;
        slot = donor[next];
        used[static_cast<std::size_t>(slot)] = 1;
    }
    return child;
}

}  // namespace

OffspringPair collision_crossover_with(const Instance& inst, const Tour& p1, const Tour& p2,
                                       double v1, double v2) {
    const int n = p1.size();
    if (p2.size() != n) throw std::invalid_argument("parents differ in length");
    const auto un = static_cast<std::size_t>(n);

    std::vector<City> c1(un, -1);
    std::vector<City> c2(un, -1);
    std::vector<char> used1(un, 0);
    std::vector<char> used2(un, 0);
    c1[0] = p1[0];
    c2[0] = p2[0];
    used1[static_cast<std::size_t>(p1[0])] = 1;
    used2[static_cast<std::size_t>(p2[0])] = 1;

    for (int i = 1; i < n; ++i) {
        const auto after = collide_genes(gene_mass(inst, p1, i), v1, gene_mass(inst, p2, i), v2);
        const auto ui = static_cast<std::size_t>(i);
        if (after.v1 <= 0.0) {
            c1[ui] = p1[i];
            used1[static_cast<std::size_t>(p1[i])] = 1;
        }
        if (after.v2 >= 0.0) {
            c2[ui] = p2[i];
            used2[static_cast<std::size_t>(p2[i])] = 1;
        }
    }
    return {Tour(fill_gaps(std::move(c1), std::move(used1), p2.cities())),
            Tour(fill_gaps(std::move(c2), std::move(used2), p1.cities()))};
}

OffspringPair collision_crossover(const Instance& inst, const Tour& p1, const Tour& p2,
                                  Rng& rng) {
    auto draw = [&rng](double cost) {
        return cost > 1.0 ? uniform_real(rng, 1.0, std::nextafter(cost, cost + 1.0)) : 1.0;
    };
    const double v1 = draw(tour_cost(inst, p1));
    const double v2 = -draw(tour_cost(inst, p2));
    return collision_crossover_with(inst, p1, p2, v1, v2);
}

OffspringPair apply_crossover(CrossoverId id, const Instance& inst, const Tour& p1,
                              const Tour& p2, Rng& rng) {
    const int n = p1.size();
    switch (id) {
        case CrossoverId::kModified:
            return modified_crossover(p1, p2, uniform_int(rng, 1, n - 1));
        case CrossoverId::kPmx: {
            int a = uniform_int(rng, 1, n);
            int b = uniform_int(rng, 1, n - 1);
            if (b >= a) ++b;
            if (a > b) std::swap(a, b);
            return pmx(p1, p2, a, b);
        }
        case CrossoverId::kCowgc: return cowgc(inst, p1, p2);
        case CrossoverId::kCowlrgc: return cowlrgc(inst, p1, p2);
        case CrossoverId::kCollision: return collision_crossover(inst, p1, p2, rng);
    }
    throw std::invalid_argument("unknown crossover");
}

}  // namespace tspga
