#include "tspga/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tspga {

std::string to_string(const CrossoverChoice& c) {
    switch (c.kind) {
        case CrossoverChoice::Kind::kSbc: return "sbc";
        case CrossoverChoice::Kind::kSac: return "sac";
        case CrossoverChoice::Kind::kOperator: return std::string(to_string(c.op));
    }
    return "?";
}

std::string to_string(const MutationChoice& m) {
    switch (m.kind) {
        case MutationChoice::Kind::kNone: return "none";
        case MutationChoice::Kind::kSbm: return "sbm";
        case MutationChoice::Kind::kSam: return "sam";
        case MutationChoice::Kind::kOperator: return std::string(to_string(m.op));
    }
    return "?";
}

std::optional<CrossoverChoice> parse_crossover_choice(std::string_view name) {
    if (name == "sbc") return CrossoverChoice::best();
    if (name == "sac") return CrossoverChoice::any();
    if (auto id = parse_crossover(name)) return CrossoverChoice::of(*id);
    return std::nullopt;
}

std::optional<MutationChoice> parse_mutation_choice(std::string_view name) {
    if (name == "none") return MutationChoice::none();
    if (name == "sbm") return MutationChoice::best();
    if (name == "sam") return MutationChoice::any();
    if (auto id = parse_mutation(name)) return MutationChoice::of(*id);
    return std::nullopt;
}

void validate_config(const GAConfig& cfg) {
    if (cfg.population_size < 2) throw std::invalid_argument("population_size must be >= 2");
    if (cfg.max_generations < 1) throw std::invalid_argument("max_generations must be >= 1");
    if (!(cfg.crossover_rate >= 0.0 && cfg.crossover_rate <= 1.0)) {
        throw std::invalid_argument("crossover_rate must lie in [0, 1]");
    }
    if (!(cfg.mutation_rate >= 0.0 && cfg.mutation_rate <= 1.0)) {
        throw std::invalid_argument("mutation_rate must lie in [0, 1]");
    }
    if (cfg.tournament_size < 2 || cfg.tournament_size > cfg.population_size) {
        throw std::invalid_argument("tournament_size must lie in [2, population_size]");
    }
}

namespace {

// Guards against 0.83 * 100 landing a hair below 83.
int fraction_of(double rate, int size) {
    return static_cast<int>(std::floor(rate * size + 1e-9));
}

}  // namespace

int crossover_count(const GAConfig& cfg) {
    return fraction_of(cfg.crossover_rate, cfg.population_size);
}
int mutation_count(const GAConfig& cfg) {
    return fraction_of(cfg.mutation_rate, cfg.population_size);
}

Tour random_tour(int n, Rng& rng) {
    Tour t = Tour::identity(n);
    auto& v = t.mutable_cities();
    // Fisher-Yates over positions 1..n-1.
    for (int i = n - 1; i > 1; --i) {
        const int j = uniform_int(rng, 1, i);
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    }
    return t;
}

Population init_population(const Instance& inst, int size, Rng& rng) {
    if (size < 2) throw std::invalid_argument("population size must be >= 2");
    Population pop;
    pop.members.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pop.members.emplace_back(inst, random_tour(inst.size(), rng));
    sort_by_cost(pop.members);
    return pop;
}

int tournament(const Population& pop, int k, Rng& rng) {
    const int size = static_cast<int>(pop.members.size());
    if (k < 1 || k > size) throw std::invalid_argument("tournament size must lie in [1, P]");
    // Contestants are distinct members; rejection is cheap while k is small.
    std::vector<int> drawn;
    drawn.reserve(static_cast<std::size_t>(k));
    if (2 * k <= size) {
        while (static_cast<int>(drawn.size()) < k) {
            const int c = uniform_int(rng, 0, size - 1);
            if (std::find(drawn.begin(), drawn.end(), c) == drawn.end()) drawn.push_back(c);
        }
    } else {
        std::vector<int> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = 0; i < k; ++i) {
            const int j = uniform_int(rng, i, size - 1);
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
            drawn.push_back(idx[static_cast<std::size_t>(i)]);
        }
    }
    return *std::min_element(drawn.begin(), drawn.end());
}

std::pair<int, int> select_parents(const Population& pop, int k, Rng& rng) {
    const int a = tournament(pop, k, rng);
    const int b = tournament(pop, k, rng);
    return {a, b};
}

ConvergenceRecord summarize(const Population& pop, int generation) {
    double sum = 0.0;
    for (const auto& m : pop.members) sum += m.cost();
    return {generation, pop.members.front().cost(),
            sum / static_cast<double>(pop.members.size())};
}

namespace {

class GenerationContext {
public:
    GenerationContext(const Instance& inst, const GAConfig& cfg, const Population& pop,
                      RunStreams& streams, int generation, std::vector<OperatorUsage>* usage,
                      RunObserver* observer)
        : inst_(inst),
          cfg_(cfg),
          pop_(pop),
          streams_(streams),
          generation_(generation),
          usage_(usage),
          observer_(observer) {
        if (needs_seen_set()) {
            for (const auto& m : pop.members) seen_.insert(m.tour());
        }
        if (cfg.strategy_draw == StrategyDraw::kPerGeneration) {
            if (cfg.crossover.kind == CrossoverChoice::Kind::kSac) {
                generation_crossover_ = cfg.crossover_portfolio.draw(streams.crossover);
            }
            if (cfg.mutation.kind == MutationChoice::Kind::kSam) {
                generation_mutation_ = cfg.mutation_portfolio.draw(streams.mutation);
            }
        }
    }

    void produce_offspring() {
        const int target = crossover_count(cfg_);
        const int couples = (target + 1) / 2;
        offspring_.reserve(static_cast<std::size_t>(target));
        for (int c = 0; c < couples && static_cast<int>(offspring_.size()) < target; ++c) {
            const auto [a, b] = select_parents(pop_, cfg_.tournament_size, streams_.selection);
            const Tour& p1 = pop_.members[static_cast<std::size_t>(a)].tour();
            const Tour& p2 = pop_.members[static_cast<std::size_t>(b)].tour();
            switch (cfg_.crossover.kind) {
                case CrossoverChoice::Kind::kOperator: {
                    auto kids = apply_crossover(cfg_.crossover.op, inst_, p1, p2,
                                                streams_.crossover);
                    add_offspring(std::move(kids.child1), target);
                    add_offspring(std::move(kids.child2), target);
                    break;
                }
                case CrossoverChoice::Kind::kSac: {
                    const CrossoverId op =
                        generation_crossover_ ? *generation_crossover_
                                              : cfg_.crossover_portfolio.draw(streams_.crossover);
                    auto kids = apply_crossover(op, inst_, p1, p2, streams_.crossover);
                    log("sac", to_string(op), add_offspring(std::move(kids.child1), target));
                    log("sac", to_string(op), add_offspring(std::move(kids.child2), target));
                    break;
                }
                case CrossoverChoice::Kind::kSbc: {
                    auto kids = sbc(inst_, p1, p2, cfg_.crossover_portfolio, seen_,
                                    streams_.crossover);
                    for (auto& k : kids) {
                        if (static_cast<int>(offspring_.size()) >= target) break;
                        seen_.insert(k.child.tour());
                        log("sbc", to_string(k.op), k.child.cost());
                        offspring_.push_back(std::move(k.child));
                    }
                    break;
                }
            }
        }
    }

    void produce_mutants() {
        const int count = mutation_count(cfg_);
        if (count == 0 || cfg_.mutation.kind == MutationChoice::Kind::kNone) return;
        const std::vector<EvaluatedTour>& pool = offspring_.empty() ? pop_.members : offspring_;
        const int pool_size = static_cast<int>(pool.size());

        // Distinct picks while the pool lasts, then with replacement.
        std::vector<int> order(static_cast<std::size_t>(pool_size));
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> picks;
        picks.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            if (i < pool_size) {
                const int j = uniform_int(streams_.mutation, i, pool_size - 1);
                std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
                picks.push_back(order[static_cast<std::size_t>(i)]);
            } else {
                picks.push_back(uniform_int(streams_.mutation, 0, pool_size - 1));
            }
        }

        mutants_.reserve(static_cast<std::size_t>(count));
        for (int idx : picks) {
            const EvaluatedTour& parent = pool[static_cast<std::size_t>(idx)];
            switch (cfg_.mutation.kind) {
                case MutationChoice::Kind::kOperator:
                    mutants_.emplace_back(inst_, apply_mutation(cfg_.mutation.op, inst_,
                                                                parent.tour(), streams_.mutation));
                    break;
                case MutationChoice::Kind::kSam: {
                    const MutationId op = generation_mutation_
                                              ? *generation_mutation_
                                              : cfg_.mutation_portfolio.draw(streams_.mutation);
                    mutants_.emplace_back(
                        inst_, apply_mutation(op, inst_, parent.tour(), streams_.mutation));
                    log("sam", to_string(op), mutants_.back().cost());
                    break;
                }
                case MutationChoice::Kind::kSbm: {
                    auto child = sbm(inst_, parent, cfg_.mutation_portfolio, seen_,
                                     streams_.mutation);
                    if (child) {
                        seen_.insert(child->child.tour());
                        log("sbm", to_string(child->op), child->child.cost());
                        mutants_.push_back(std::move(child->child));
                    }
                    break;
                }
                case MutationChoice::Kind::kNone: break;
            }
        }
    }

    Population replace() {
        Population next;
        const auto size = static_cast<std::size_t>(cfg_.population_size);
        if (cfg_.replacement == Replacement::kElitist) {
            next.members = pop_.members;
            next.members.insert(next.members.end(), offspring_.begin(), offspring_.end());
            next.members.insert(next.members.end(), mutants_.begin(), mutants_.end());
            sort_by_cost(next.members);
            next.members.resize(size, next.members.front());
            return next;
        }
        std::vector<EvaluatedTour> children = offspring_;
        children.insert(children.end(), mutants_.begin(), mutants_.end());
        sort_by_cost(children);
        next.members.push_back(pop_.members.front());
        for (std::size_t i = 0; i < children.size() && next.members.size() < size; ++i) {
            next.members.push_back(children[i]);
        }
        for (std::size_t i = 1; next.members.size() < size; ++i) {
            next.members.push_back(pop_.members[i]);
        }
        sort_by_cost(next.members);
        return next;
    }

private:
    bool needs_seen_set() const {
        return cfg_.crossover.kind == CrossoverChoice::Kind::kSbc ||
               cfg_.mutation.kind == MutationChoice::Kind::kSbm;
    }

    // Returns the child's cost so strategy logging can report it.
    double add_offspring(Tour child, int target) {
        EvaluatedTour e(inst_, std::move(child));
        const double cost = e.cost();
        if (static_cast<int>(offspring_.size()) < target) {
            if (needs_seen_set()) seen_.insert(e.tour());
            offspring_.push_back(std::move(e));
        }
        return cost;
    }

    void log(std::string_view strategy, std::string_view op, double cost) {
        if (!usage_ && !observer_) return;
        OperatorUsage u{generation_, std::string(strategy), std::string(op), cost};
        if (observer_) observer_->on_operator(u);
        if (usage_) usage_->push_back(std::move(u));
    }

    const Instance& inst_;
    const GAConfig& cfg_;
    const Population& pop_;
    RunStreams& streams_;
    int generation_;
    std::vector<OperatorUsage>* usage_;
    RunObserver* observer_;
    TourSet seen_;
    std::optional<CrossoverId> generation_crossover_;
    std::optional<MutationId> generation_mutation_;
    std::vector<EvaluatedTour> offspring_;
    std::vector<EvaluatedTour> mutants_;
};

}  // namespace

Population evolve_generation(const Instance& inst, const GAConfig& cfg, const Population& pop,
                             RunStreams& streams, int generation,
                             std::vector<OperatorUsage>* usage, RunObserver* observer) {
    GenerationContext ctx(inst, cfg, pop, streams, generation, usage, observer);
    ctx.produce_offspring();
    ctx.produce_mutants();
    return ctx.replace();
}

RunResult run(const GAConfig& cfg, const Instance& inst, RunObserver* observer) {
    validate_config(cfg);
    RunStreams streams(cfg.seed);
    Population pop = init_population(inst, cfg.population_size, streams.init);

    std::vector<ConvergenceRecord> history;
    history.reserve(static_cast<std::size_t>(cfg.max_generations));
    std::vector<OperatorUsage> usage;

    const auto start = std::chrono::steady_clock::now();
    for (int g = 1; g <= cfg.max_generations; ++g) {
        pop = evolve_generation(inst, cfg, pop, streams, g, cfg.log_operators ? &usage : nullptr,
                                observer);
        history.push_back(summarize(pop, g));
        if (observer) observer->on_generation(history.back());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    return RunResult{pop.members.front(), std::move(history), std::move(usage), elapsed.count()};
}

}  // namespace tspga
