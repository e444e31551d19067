#include "tspga/validate.hpp"

#include <stdexcept>

#include "tspga/crossover.hpp"
#include "tspga/ga.hpp"
#include "tspga/mutation.hpp"
#include "tspga/rng.hpp"

namespace tspga {
namespace {

void record(OperatorCheck& check, const Instance& inst, const Tour& out, const char* what) {
    const auto problems = validate_tour(inst, out);
    if (problems.empty()) return;
    ++check.failures;
    if (check.first_failure.empty()) {
        check.first_failure = "n=" + std::to_string(inst.size()) + " " + what + ": " +
                              problems.front().message + " in " + to_string(out);
    }
}

}  // namespace

std::vector<OperatorCheck> validate_operators(const ValidationOptions& opts) {
    if (opts.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (opts.min_cities < 4 || opts.max_cities < opts.min_cities) {
        throw std::invalid_argument("city range must satisfy 4 <= min <= max");
    }
    std::vector<Instance> instances;
    for (int n = opts.min_cities; n <= opts.max_cities; ++n) {
        instances.push_back(random_instance(n, opts.seed * 1000003ULL + static_cast<unsigned>(n)));
    }
    Rng rng = make_stream(opts.seed, Stream::kInit);
    auto pick = [&]() -> const Instance& {
        return instances[static_cast<std::size_t>(
            uniform_int(rng, 0, static_cast<int>(instances.size()) - 1))];
    };

    std::vector<OperatorCheck> out;
    for (CrossoverId id : kAllCrossovers) {
        OperatorCheck check{std::string(to_string(id)), opts.trials, 0, {}};
        for (int t = 0; t < opts.trials; ++t) {
            const Instance& inst = pick();
            const Tour p1 = random_tour(inst.size(), rng);
            const Tour p2 = random_tour(inst.size(), rng);
            const auto kids = apply_crossover(id, inst, p1, p2, rng);
            record(check, inst, kids.child1, "child1");
            record(check, inst, kids.child2, "child2");
        }
        out.push_back(std::move(check));
    }
    for (MutationId id : kAllMutations) {
        OperatorCheck check{std::string(to_string(id)), opts.trials, 0, {}};
        for (int t = 0; t < opts.trials; ++t) {
            const Instance& inst = pick();
            const Tour in = random_tour(inst.size(), rng);
            const Tour result = apply_mutation(id, inst, in, rng);
            record(check, inst, result, "output");
            if (is_deterministic(id) && apply_mutation(id, inst, in, rng) != result) {
                ++check.failures;
                if (check.first_failure.empty()) {
                    check.first_failure = "n=" + std::to_string(inst.size()) +
                                          ": deterministic operator gave two answers";
                }
            }
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace tspga
