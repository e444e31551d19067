#include "tspga/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "tspga/csv.hpp"
#include "tspga/tsplib.hpp"

namespace tspga {
namespace {

const std::vector<std::string> kTableInstances = {
    "rat783", "a280", "u159", "ch130", "bier127", "kroA100",
    "pr76", "berlin52", "att48", "eil51", "pr144",
};

std::vector<Combination> crossover_columns() {
    return {
        {"SBC", CrossoverChoice::best(), MutationChoice::none()},
        {"SAC", CrossoverChoice::any(), MutationChoice::none()},
        {"Collision", CrossoverChoice::of(CrossoverId::kCollision), MutationChoice::none()},
        {"PMX", CrossoverChoice::of(CrossoverId::kPmx), MutationChoice::none()},
        {"Modified", CrossoverChoice::of(CrossoverId::kModified), MutationChoice::none()},
    };
}

std::vector<Combination> mutation_columns() {
    const auto x = CrossoverChoice::of(CrossoverId::kModified);  // unused at PC = 0
    return {
        {"SBM", x, MutationChoice::best()},
        {"SAM", x, MutationChoice::any()},
        {"Rearrangement", x, MutationChoice::of(MutationId::kRearrangement)},
        {"Exchange", x, MutationChoice::of(MutationId::kExchange)},
    };
}

std::vector<Combination> combined_columns() {
    const std::pair<const char*, MutationChoice> mutations[] = {
        {"Exchange", MutationChoice::of(MutationId::kExchange)},
        {"SBM", MutationChoice::best()},
        {"SAM", MutationChoice::any()},
    };
    const std::pair<const char*, CrossoverChoice> crossovers[] = {
        {"Modified", CrossoverChoice::of(CrossoverId::kModified)},
        {"Collision", CrossoverChoice::of(CrossoverId::kCollision)},
        {"SBC", CrossoverChoice::best()},
        {"SAC", CrossoverChoice::any()},
    };
    std::vector<Combination> out;
    for (const auto& [mname, m] : mutations) {
        for (const auto& [cname, c] : crossovers) {
            out.push_back({std::string(mname) + "+" + cname, c, m});
        }
    }
    return out;
}

std::string csv_field(double v) {
    // Integral costs print without decimals; anything else keeps six.
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(v));
        return std::string(buf, ptr);
    }
    return format_fixed6(v);
}

bool parse_int(std::string_view s, long long& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::vector<std::string> preset_names() { return {"3.1", "3.2", "4.1", "4.2", "5.1"}; }

std::optional<Preset> find_preset(std::string_view name) {
    if (name == "3.1" || name == "3.2") {
        return Preset{std::string(name), name == "3.1" ? 200 : 100, 8000, 1.0, 0.0,
                      crossover_columns(), kTableInstances};
    }
    if (name == "4.1" || name == "4.2") {
        return Preset{std::string(name), name == "4.1" ? 200 : 100, 8000, 0.0, 1.0,
                      mutation_columns(), kTableInstances};
    }
    if (name == "5.1") {
        std::vector<std::string> instances = kTableInstances;
        instances.pop_back();  // no pr144 row in this table
        return Preset{"5.1", 100, 1600, 1.0, 1.0, combined_columns(), std::move(instances)};
    }
    return std::nullopt;
}

std::optional<double> known_optimum(std::string_view instance) {
    static const std::pair<std::string_view, double> kOptima[] = {
        {"rat783", 8806},   {"a280", 2579},     {"u159", 42080},   {"ch130", 6110},
        {"bier127", 118282}, {"kroA100", 21282}, {"pr76", 108159}, {"berlin52", 7542},
        {"att48", 10628},   {"eil51", 426},     {"pr144", 58537},
    };
    for (const auto& [name, opt] : kOptima) {
        if (name == instance) return opt;
    }
    return std::nullopt;
}

std::filesystem::path default_tsplib_dir(const std::filesystem::path& fallback) {
    if (const char* env = std::getenv(std::string(kTsplibDirEnv).c_str()); env && *env) {
        return env;
    }
    return fallback;
}

Instance resolve_instance(std::string_view spec, const std::filesystem::path& dir,
                          Metric metric) {
    if (spec.starts_with("random:")) {
        const auto rest = spec.substr(7);
        const auto colon = rest.find(':');
        long long n = 0;
        long long seed = 0;
        if (colon == std::string_view::npos || !parse_int(rest.substr(0, colon), n) ||
            !parse_int(rest.substr(colon + 1), seed) || n < 3 || seed < 0) {
            throw std::runtime_error("bad random instance spec '" + std::string(spec) +
                                     "', expected random:N:SEED with N >= 3");
        }
        return random_instance(static_cast<int>(n), static_cast<unsigned long long>(seed),
                               1000.0, metric);
    }
    const std::filesystem::path direct(spec);
    if (std::filesystem::is_regular_file(direct)) return load_tsplib(direct, metric);
    const auto named = dir / (std::string(spec) + ".tsp");
    if (std::filesystem::is_regular_file(named)) return load_tsplib(named, metric);
    throw std::runtime_error("instance '" + std::string(spec) + "' not found (looked in " +
                             dir.string() + ")");
}

void validate_spec(const ExperimentSpec& spec) {
    if (spec.runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (!(spec.scale > 0.0)) throw std::invalid_argument("scale must be > 0");
    if (spec.preset.combinations.empty()) throw std::invalid_argument("preset has no columns");
}

int scaled_generations(const ExperimentSpec& spec) {
    const double g = std::round(spec.preset.max_generations * spec.scale);
    return std::max(1, static_cast<int>(g));
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of no values");
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

ResultTable run_experiment(const ExperimentSpec& spec, const RunCallback& on_run) {
    validate_spec(spec);
    const auto& names = spec.instances.empty() ? spec.preset.instances : spec.instances;
    const int generations = scaled_generations(spec);

    ResultTable table;
    table.runs = spec.runs;
    for (const auto& name : names) {
        if (name == "rat783" && !spec.include_rat783) {
            table.skipped.push_back(name + " (needs --include-rat783)");
            continue;
        }
        std::optional<Instance> inst;
        try {
            inst.emplace(resolve_instance(name, spec.tsplib_dir, spec.metric));
        } catch (const std::exception& e) {
            table.skipped.push_back(name + " (" + e.what() + ")");
            continue;
        }
        for (const auto& combo : spec.preset.combinations) {
            ResultRow row;
            row.instance = inst->name();
            row.cities = inst->size();
            row.combination = combo.label;
            if (spec.metric == Metric::kRoundedEuc2d) row.optimum = known_optimum(inst->name());
            for (int k = 0; k < spec.runs; ++k) {
                GAConfig cfg;
                cfg.population_size = spec.preset.population_size;
                cfg.max_generations = generations;
                cfg.crossover_rate = spec.preset.crossover_rate;
                cfg.mutation_rate = spec.preset.mutation_rate;
                cfg.crossover = combo.crossover;
                cfg.mutation = combo.mutation;
                cfg.seed = spec.base_seed + static_cast<std::uint64_t>(k);
                cfg.metric = spec.metric;
                const RunResult result = run(cfg, *inst);
                row.best_costs.push_back(result.best.cost());
                if (spec.convergence_dir) {
                    std::filesystem::create_directories(*spec.convergence_dir);
                    const auto file = *spec.convergence_dir /
                                      (inst->name() + "_" + combo.label + "_seed" +
                                       std::to_string(cfg.seed) + ".csv");
                    write_convergence_csv(file, result.history);
                }
                if (on_run) on_run(*inst, combo, cfg.seed, result);
            }
            row.median = median(row.best_costs);
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

void write_result_table(std::ostream& out, const ResultTable& table) {
    out << "instance,cities,combination";
    for (int k = 1; k <= table.runs; ++k) out << ",seed_" << k;
    out << ",median,optimum\n";
    for (const auto& row : table.rows) {
        if (static_cast<int>(row.best_costs.size()) != table.runs) {
            throw std::logic_error("row " + row.instance + "/" + row.combination +
                                   " has the wrong number of runs");
        }
        out << row.instance << ',' << row.cities << ',' << row.combination;
        for (double c : row.best_costs) {
            if (row.optimum && c < *row.optimum) {
                throw std::logic_error(row.instance + ": best cost " + csv_field(c) +
                                       " is below the known optimum " +
                                       csv_field(*row.optimum));
            }
            out << ',' << csv_field(c);
        }
        out << ',' << csv_field(row.median) << ',';
        if (row.optimum) out << csv_field(*row.optimum);
        out << '\n';
    }
}

void write_result_table(const std::filesystem::path& path, const ResultTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_result_table(out, table);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace tspga
