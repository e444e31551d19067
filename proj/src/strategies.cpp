#include "tspga/strategies.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tspga {
namespace {

template <typename T>
void require_unique_nonempty(const std::vector<T>& ops, const char* what) {
    if (ops.empty()) throw std::invalid_argument(std::string(what) + " portfolio is empty");
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (ops[i] == ops[j]) {
                throw std::invalid_argument(std::string(what) + " portfolio has duplicates");
            }
        }
    }
}

}  // namespace

CrossoverPortfolio::CrossoverPortfolio()
    : ops_{CrossoverId::kCowgc, CrossoverId::kCowlrgc, CrossoverId::kCollision} {}

CrossoverPortfolio::CrossoverPortfolio(std::vector<CrossoverId> ops) : ops_(std::move(ops)) {
    require_unique_nonempty(ops_, "crossover");
}

CrossoverId CrossoverPortfolio::draw(Rng& rng) const {
    return ops_[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(ops_.size()) - 1))];
}

MutationPortfolio::MutationPortfolio() : ops_(kGuidedMutations.begin(), kGuidedMutations.end()) {}

MutationPortfolio::MutationPortfolio(std::vector<MutationId> ops) : ops_(std::move(ops)) {
    require_unique_nonempty(ops_, "mutation");
}

MutationId MutationPortfolio::draw(Rng& rng) const {
    return ops_[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(ops_.size()) - 1))];
}

std::vector<CrossoverChild> sbc(const Instance& inst, const Tour& p1, const Tour& p2,
                                const CrossoverPortfolio& portfolio, const TourSet& population,
                                Rng& rng) {
    std::vector<CrossoverChild> pool;
    pool.reserve(portfolio.ops().size() * 2);
    for (CrossoverId op : portfolio.ops()) {
        auto [c1, c2] = apply_crossover(op, inst, p1, p2, rng);
        pool.push_back({EvaluatedTour(inst, std::move(c1)), op});
        pool.push_back({EvaluatedTour(inst, std::move(c2)), op});
    }
    std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        return a.child.cost() < b.child.cost();
    });

    std::vector<CrossoverChild> out;
    for (auto& cand : pool) {
        if (population.contains(cand.child.tour())) continue;
        if (!out.empty() && out.front().child.tour() == cand.child.tour()) continue;
        out.push_back(std::move(cand));
        if (out.size() == 2) break;
    }
    return out;
}

SacResult sac(const Instance& inst, const Tour& p1, const Tour& p2,
              const CrossoverPortfolio& portfolio, Rng& rng) {
    const CrossoverId op = portfolio.draw(rng);
    return {op, apply_crossover(op, inst, p1, p2, rng)};
}

std::optional<MutationChild> sbm(const Instance& inst, const EvaluatedTour& c,
                                 const MutationPortfolio& portfolio, const TourSet& population,
                                 Rng& rng) {
    std::optional<MutationChild> best;
    for (MutationId op : portfolio.ops()) {
        EvaluatedTour child(inst, apply_mutation(op, inst, c.tour(), rng));
        if (best && child.cost() >= best->child.cost()) continue;
        if (population.contains(child.tour())) continue;
        best.emplace(MutationChild{std::move(child), op});
    }
    return best;
}

MutationChild sam(const Instance& inst, const EvaluatedTour& c,
                  const MutationPortfolio& portfolio, Rng& rng) {
    const MutationId op = portfolio.draw(rng);
    return {EvaluatedTour(inst, apply_mutation(op, inst, c.tour(), rng)), op};
}

}  // namespace tspga
