#include <cmath>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tspga/ga.hpp"
#include "tspga/oracle.hpp"

using namespace tspga;

namespace {

void check_population(const Instance& inst, const Population& pop, int size) {
    REQUIRE(static_cast<int>(pop.members.size()) == size);
    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        REQUIRE(validate_tour(inst, pop.members[i].tour()).empty());
        REQUIRE(pop.members[i].cost() == doctest::Approx(oracle::cycle_cost(inst, pop.members[i].tour())));
        if (i > 0) REQUIRE(pop.members[i - 1].cost() <= pop.members[i].cost());
    }
}

class CountingObserver : public RunObserver {
public:
    int generations = 0;
    int operators = 0;
    void on_generation(const ConvergenceRecord&) override { ++generations; }
    void on_operator(const OperatorUsage&) override { ++operators; }
};

}  // namespace

TEST_SUITE("config") {
    TEST_CASE("validation") {
        GAConfig ok;
        CHECK_NOTHROW(validate_config(ok));
        auto bad = [](auto mutate) {
            GAConfig c;
            mutate(c);
            return c;
        };
        CHECK_THROWS(validate_config(bad([](GAConfig& c) { c.population_size = 1; })));
        CHECK_THROWS(validate_config(bad([](GAConfig& c) { c.max_generations = 0; })));
        CHECK_THROWS(validate_config(bad([](GAConfig& c) { c.crossover_rate = 1.5; })));
        CHECK_THROWS(validate_config(bad([](GAConfig& c) { c.mutation_rate = -0.1; })));
        CHECK_THROWS(validate_config(bad([](GAConfig& c) { c.tournament_size = 1; })));
        CHECK_THROWS(validate_config(bad([](GAConfig& c) { c.tournament_size = 101; })));
    }

    TEST_CASE("operator counts floor the population fractions") {
        GAConfig c;
        CHECK(crossover_count(c) == 83);
        CHECK(mutation_count(c) == 2);
        c.crossover_rate = 0.92;
        CHECK(crossover_count(c) == 92);
        c.population_size = 7;
        c.mutation_rate = 0.5;
        CHECK(mutation_count(c) == 3);
    }

    TEST_CASE("choice names") {
        CHECK(parse_crossover_choice("sbc") == CrossoverChoice::best());
        CHECK(parse_crossover_choice("sac") == CrossoverChoice::any());
        CHECK(parse_crossover_choice("pmx") == CrossoverChoice::of(CrossoverId::kPmx));
        CHECK_FALSE(parse_crossover_choice("sbm").has_value());
        CHECK(parse_mutation_choice("none") == MutationChoice::none());
        CHECK(parse_mutation_choice("sbm") == MutationChoice::best());
        CHECK(parse_mutation_choice("sam") == MutationChoice::any());
        CHECK(parse_mutation_choice("swglm") == MutationChoice::of(MutationId::kSwglm));
        CHECK(to_string(CrossoverChoice::best()) == "sbc");
        CHECK(to_string(MutationChoice::of(MutationId::kExchange)) == "exchange");
    }
}

TEST_SUITE("population") {
    TEST_CASE("initial population is valid, sorted and reproducible") {
        const Instance inst = random_instance(30, 1);
        Rng a = make_stream(5, Stream::kInit);
        Rng b = make_stream(5, Stream::kInit);
        const Population pa = init_population(inst, 40, a);
        const Population pb = init_population(inst, 40, b);
        check_population(inst, pa, 40);
        for (std::size_t i = 0; i < 40; ++i) CHECK(pa.members[i].tour() == pb.members[i].tour());
        CHECK_THROWS((void)init_population(inst, 1, a));
    }

    TEST_CASE("full tournament returns the best") {
        const Instance inst = random_instance(10, 1);
        Rng rng = make_stream(1, Stream::kInit);
        const Population pop = init_population(inst, 6, rng);
        Rng sel = make_stream(1, Stream::kSelection);
        for (int i = 0; i < 200; ++i) {
            const auto [a, b] = select_parents(pop, 6, sel);
            REQUIRE(a == 0);
            REQUIRE(b == 0);
        }
    }

    TEST_CASE("binary tournament selection is rank-linear") {
        const int size = 20;
        const Instance inst = random_instance(10, 2);
        Rng rng = make_stream(2, Stream::kInit);
        const Population pop = init_population(inst, size, rng);
        Rng sel = make_stream(2, Stream::kSelection);
        std::vector<long> counts(static_cast<std::size_t>(size), 0);
        const int draws = 100000;
        for (int i = 0; i < draws; ++i) ++counts[static_cast<std::size_t>(tournament(pop, 2, sel))];
        for (int r = 0; r < size; ++r) {
            // Two distinct contestants: P(winner has rank r) = 2(P - 1 - r) / (P(P - 1)).
            const double expected = 2.0 * (size - 1 - r) / (size * (size - 1.0));
            const double observed = static_cast<double>(counts[static_cast<std::size_t>(r)]) / draws;
            CHECK(std::abs(observed - expected) <= 0.02 * expected + 0.002);
        }
    }
}

TEST_SUITE("generation") {
    TEST_CASE("no operators leave the population unchanged") {
        const Instance inst = random_instance(20, 3);
        GAConfig cfg;
        cfg.population_size = 30;
        cfg.crossover_rate = 0.0;
        cfg.mutation_rate = 0.0;
        RunStreams streams(3);
        const Population pop = init_population(inst, 30, streams.init);
        const Population next = evolve_generation(inst, cfg, pop, streams, 1);
        for (std::size_t i = 0; i < 30; ++i) CHECK(next.members[i].tour() == pop.members[i].tour());
    }

    TEST_CASE("full crossover produces P offspring") {
        const Instance inst = random_instance(20, 4);
        GAConfig cfg;
        cfg.population_size = 100;
        cfg.crossover_rate = 1.0;
        cfg.mutation_rate = 0.0;
        cfg.crossover = CrossoverChoice::of(CrossoverId::kPmx);
        cfg.log_operators = true;
        RunStreams streams(4);
        const Population pop = init_population(inst, 100, streams.init);

        cfg.crossover = CrossoverChoice::any();
        std::vector<OperatorUsage> usage;
        (void)evolve_generation(inst, cfg, pop, streams, 1, &usage);
        CHECK(usage.size() == 100);

        cfg.crossover = CrossoverChoice::best();
        usage.clear();
        (void)evolve_generation(inst, cfg, pop, streams, 1, &usage);
        CHECK(usage.size() <= 100);
        CHECK(usage.size() >= 90);
        for (const auto& u : usage) CHECK(u.strategy == "sbc");
    }

    TEST_CASE("best cost never increases and invariants hold") {
        const CrossoverChoice xs[] = {CrossoverChoice::of(CrossoverId::kModified),
                                      CrossoverChoice::of(CrossoverId::kCollision),
                                      CrossoverChoice::best(), CrossoverChoice::any()};
        const MutationChoice ms[] = {MutationChoice::none(), MutationChoice::of(MutationId::kExchange),
                                     MutationChoice::best(), MutationChoice::any()};
        int steps = 0;
        for (const auto& x : xs) {
            for (const auto& m : ms) {
                const Instance inst = random_instance(25, static_cast<unsigned long long>(steps));
                GAConfig cfg;
                cfg.population_size = 20;
                cfg.crossover_rate = 0.8;
                cfg.mutation_rate = 0.3;
                cfg.crossover = x;
                cfg.mutation = m;
                RunStreams streams(static_cast<std::uint64_t>(steps));
                Population pop = init_population(inst, 20, streams.init);
                for (int g = 1; g <= 70; ++g, ++steps) {
                    const double before = pop.members.front().cost();
                    pop = evolve_generation(inst, cfg, pop, streams, g);
                    REQUIRE(pop.members.front().cost() <= before);
                    check_population(inst, pop, 20);
                }
            }
        }
        CHECK(steps >= 1000);
    }

    TEST_CASE("generational replacement keeps the elite") {
        const Instance inst = random_instance(20, 5);
        GAConfig cfg;
        cfg.population_size = 20;
        cfg.crossover_rate = 1.0;
        cfg.mutation_rate = 0.2;
        cfg.replacement = Replacement::kGenerationalElite;
        RunStreams streams(5);
        Population pop = init_population(inst, 20, streams.init);
        for (int g = 1; g <= 50; ++g) {
            const double before = pop.members.front().cost();
            pop = evolve_generation(inst, cfg, pop, streams, g);
            REQUIRE(pop.members.front().cost() <= before);
            check_population(inst, pop, 20);
        }
    }

    TEST_CASE("per-generation strategy draws use one operator per generation") {
        const Instance inst = random_instance(20, 6);
        GAConfig cfg;
        cfg.population_size = 30;
        cfg.crossover_rate = 1.0;
        cfg.mutation_rate = 1.0;
        cfg.crossover = CrossoverChoice::any();
        cfg.mutation = MutationChoice::any();
        cfg.strategy_draw = StrategyDraw::kPerGeneration;
        cfg.max_generations = 20;
        cfg.log_operators = true;
        const RunResult r = run(cfg, inst);
        std::map<std::pair<int, std::string>, std::set<std::string>> ops;
        for (const auto& u : r.usage) ops[{u.generation, u.strategy}].insert(u.op);
        CHECK(ops.size() == 40);
        for (const auto& [k, v] : ops) CHECK(v.size() == 1);
    }
}

TEST_SUITE("run") {
    TEST_CASE("identical seeds give identical results") {
        const Instance inst = random_instance(30, 7);
        GAConfig cfg;
        cfg.population_size = 30;
        cfg.max_generations = 40;
        cfg.crossover = CrossoverChoice::best();
        cfg.mutation = MutationChoice::any();
        cfg.mutation_rate = 0.2;
        cfg.log_operators = true;
        cfg.seed = 77;
        const RunResult a = run(cfg, inst);
        const RunResult b = run(cfg, inst);
        CHECK(a.best.tour() == b.best.tour());
        CHECK(a.history == b.history);
        REQUIRE(a.usage.size() == b.usage.size());
        for (std::size_t i = 0; i < a.usage.size(); ++i) {
            CHECK(a.usage[i].op == b.usage[i].op);
            CHECK(a.usage[i].child_cost == b.usage[i].child_cost);
        }
        cfg.seed = 78;
        CHECK_FALSE(run(cfg, inst).history == a.history);
    }

    TEST_CASE("history shape") {
        const Instance inst = random_instance(15, 8);
        GAConfig cfg;
        cfg.population_size = 20;
        cfg.max_generations = 25;
        CountingObserver obs;
        const RunResult r = run(cfg, inst, &obs);
        REQUIRE(r.history.size() == 25);
        CHECK(obs.generations == 25);
        for (std::size_t i = 0; i < r.history.size(); ++i) {
            CHECK(r.history[i].generation == static_cast<int>(i) + 1);
            CHECK(r.history[i].best_cost <= r.history[i].mean_cost + 1e-9);
            if (i) CHECK(r.history[i].best_cost <= r.history[i - 1].best_cost);
        }
        CHECK(r.best.cost() == r.history.back().best_cost);
        CHECK(r.evolve_seconds >= 0.0);
    }

    TEST_CASE("finds the exhaustive optimum on small instances") {
        int hits = 0;
        for (int s = 0; s < 5; ++s) {
            const Instance inst = random_instance(8, 5000 + static_cast<unsigned long long>(s));
            GAConfig cfg;
            cfg.population_size = 50;
            cfg.max_generations = 200;
            cfg.crossover_rate = 1.0;
            cfg.mutation_rate = 1.0;
            cfg.crossover = CrossoverChoice::best();
            cfg.mutation = MutationChoice::best();
            cfg.seed = static_cast<std::uint64_t>(s);
            hits += run(cfg, inst).best.cost() == brute_force_optimal(inst).cost;
        }
        CHECK(hits >= 4);
    }
}
