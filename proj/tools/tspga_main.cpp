#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tspga/bench.hpp"
#include "tspga/csv.hpp"
#include "tspga/ga.hpp"
#include "tspga/oracle.hpp"
#include "tspga/validate.hpp"

#ifndef TSPGA_DEFAULT_DATA_DIR
#define TSPGA_DEFAULT_DATA_DIR "data/tsplib"
#endif

namespace {

using namespace tspga;

const std::map<std::string, Metric> kMetrics = {
    {"rounded", Metric::kRoundedEuc2d},
    {"raw", Metric::kRawEuc2d},
};

const std::map<std::string, Replacement> kReplacements = {
    {"elitist", Replacement::kElitist},
    {"generational", Replacement::kGenerationalElite},
};

const std::map<std::string, StrategyDraw> kDraws = {
    {"invocation", StrategyDraw::kPerInvocation},
    {"generation", StrategyDraw::kPerGeneration},
};

struct RunArgs {
    std::string instance;
    std::string crossover = "modified";
    std::string mutation = "exchange";
    double pc = 0.83;
    double pm = 0.02;
    int pop = 100;
    int gens = 2000;
    std::uint64_t seed = 1;
    int tournament = 2;
    Metric metric = Metric::kRoundedEuc2d;
    Replacement replacement = Replacement::kElitist;
    StrategyDraw draw = StrategyDraw::kPerInvocation;
    std::string out;
    std::string usage_log;
    std::string tsplib_dir;
};

struct BenchArgs {
    std::string table;
    int runs = 5;
    double scale = 1.0;
    std::uint64_t seed = 1;
    std::vector<std::string> instances;
    std::string tsplib_dir;
    std::string out;
    std::string convergence_dir;
    bool include_rat783 = false;
};

struct OracleArgs {
    std::string instance;
    std::string tsplib_dir;
};

std::filesystem::path tsplib_dir(const std::string& flag) {
    return flag.empty() ? default_tsplib_dir(TSPGA_DEFAULT_DATA_DIR) : std::filesystem::path(flag);
}

int cmd_run(const RunArgs& a) {
    GAConfig cfg;
    const auto xo = parse_crossover_choice(a.crossover);
    if (!xo) throw std::invalid_argument("unknown crossover '" + a.crossover + "'");
    const auto mu = parse_mutation_choice(a.mutation);
    if (!mu) throw std::invalid_argument("unknown mutation '" + a.mutation + "'");
    cfg.crossover = *xo;
    cfg.mutation = *mu;
    cfg.crossover_rate = a.pc;
    cfg.mutation_rate = a.pm;
    cfg.population_size = a.pop;
    cfg.max_generations = a.gens;
    cfg.seed = a.seed;
    cfg.tournament_size = a.tournament;
    cfg.metric = a.metric;
    cfg.replacement = a.replacement;
    cfg.strategy_draw = a.draw;
    cfg.log_operators = !a.usage_log.empty();
    validate_config(cfg);

    const Instance inst = resolve_instance(a.instance, tsplib_dir(a.tsplib_dir), a.metric);
    const RunResult result = run(cfg, inst);

    if (a.out.empty() || a.out == "-") {
        write_convergence_csv(std::cout, result.history);
    } else {
        write_convergence_csv(std::filesystem::path(a.out), result.history);
    }
    if (!a.usage_log.empty()) write_usage_csv(std::filesystem::path(a.usage_log), result.usage);

    std::cerr << inst.name() << ": best " << format_fixed6(result.best.cost()) << " after "
              << cfg.max_generations << " generations (" << result.evolve_seconds << " s)\n"
              << "tour " << to_string(result.best.tour()) << '\n';
    return 0;
}

int cmd_bench(const BenchArgs& a) {
    auto preset = find_preset(a.table);
    if (!preset) throw std::invalid_argument("unknown table '" + a.table + "'");
    ExperimentSpec spec;
    spec.preset = std::move(*preset);
    spec.instances = a.instances;
    spec.runs = a.runs;
    spec.base_seed = a.seed;
    spec.scale = a.scale;
    spec.tsplib_dir = tsplib_dir(a.tsplib_dir);
    spec.include_rat783 = a.include_rat783;
    if (!a.convergence_dir.empty()) spec.convergence_dir = a.convergence_dir;
    validate_spec(spec);

    const ResultTable table = run_experiment(
        spec, [](const Instance& inst, const Combination& combo, std::uint64_t seed,
                 const RunResult& r) {
            std::cerr << inst.name() << ' ' << combo.label << " seed " << seed << ": "
                      << format_fixed6(r.best.cost()) << '\n';
        });
    for (const auto& s : table.skipped) std::cerr << "warning: skipped " << s << '\n';

    if (a.out.empty() || a.out == "-") {
        write_result_table(std::cout, table);
    } else {
        write_result_table(std::filesystem::path(a.out), table);
    }
    return 0;
}

int cmd_oracle(const OracleArgs& a) {
    const Instance inst = resolve_instance(a.instance, tsplib_dir(a.tsplib_dir));
    const OptimalTour opt = brute_force_optimal(inst);
    std::cout << "cost " << format_fixed6(opt.cost) << "\ntour " << to_string(opt.tour) << '\n';
    return 0;
}

int cmd_validate(const ValidationOptions& opts) {
    int bad = 0;
    for (const auto& c : validate_operators(opts)) {
        std::cout << (c.failures == 0 ? "ok   " : "FAIL ") << c.op << ' ' << c.trials
                  << " trials";
        if (c.failures) std::cout << ", " << c.failures << " failures: " << c.first_failure;
        std::cout << '\n';
        bad += c.failures == 0 ? 0 : 1;
    }
    return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genetic algorithm benchmark harness for the symmetric TSP"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "single GA run, writes a convergence CSV");
    run_cmd->add_option("--instance", run_args.instance, "TSPLIB name, .tsp path or random:N:SEED")
        ->required();
    run_cmd->add_option("--crossover", run_args.crossover, "operator name, sbc or sac")
        ->capture_default_str();
    run_cmd->add_option("--mutation", run_args.mutation, "operator name, sbm, sam or none")
        ->capture_default_str();
    run_cmd->add_option("--pc", run_args.pc, "crossover rate")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    run_cmd->add_option("--pm", run_args.pm, "mutation rate")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    run_cmd->add_option("--pop", run_args.pop, "population size")->capture_default_str();
    run_cmd->add_option("--gens", run_args.gens, "generations")->capture_default_str();
    run_cmd->add_option("--seed", run_args.seed)->capture_default_str();
    run_cmd->add_option("--tournament", run_args.tournament, "tournament size")
        ->capture_default_str();
    run_cmd->add_option("--metric", run_args.metric)
        ->transform(CLI::CheckedTransformer(kMetrics, CLI::ignore_case));
    run_cmd->add_option("--replacement", run_args.replacement)
        ->transform(CLI::CheckedTransformer(kReplacements, CLI::ignore_case));
    run_cmd->add_option("--strategy-draw", run_args.draw, "when SAC/SAM pick an operator")
        ->transform(CLI::CheckedTransformer(kDraws, CLI::ignore_case));
    run_cmd->add_option("--out", run_args.out, "convergence CSV path (default stdout)");
    run_cmd->add_option("--usage-log", run_args.usage_log, "operator usage CSV path");
    run_cmd->add_option("--tsplib-dir", run_args.tsplib_dir);

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "run a table preset, writes a result CSV");
    bench_cmd->add_option("--table", bench_args.table, "3.1, 3.2, 4.1, 4.2 or 5.1")->required();
    bench_cmd->add_option("--runs", bench_args.runs, "seeds per cell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--scale", bench_args.scale, "generation multiplier")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench_args.seed, "first seed")->capture_default_str();
    bench_cmd->add_option("--instances", bench_args.instances, "override the preset's instances")
        ->delimiter(',');
    bench_cmd->add_option("--tsplib-dir", bench_args.tsplib_dir);
    bench_cmd->add_option("--out", bench_args.out, "result CSV path (default stdout)");
    bench_cmd->add_option("--convergence-dir", bench_args.convergence_dir,
                          "write one convergence CSV per run here");
    bench_cmd->add_flag("--include-rat783", bench_args.include_rat783);

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "exact optimum by enumeration (n <= 11)");
    oracle_cmd->add_option("--instance", oracle_args.instance)->required();
    oracle_cmd->add_option("--tsplib-dir", oracle_args.tsplib_dir);

    ValidationOptions vopts;
    auto* validate_cmd = app.add_subcommand("validate", "operator property suite");
    validate_cmd->add_option("--trials", vopts.trials)->capture_default_str();
    validate_cmd->add_option("--min-n", vopts.min_cities)->capture_default_str();
    validate_cmd->add_option("--max-n", vopts.max_cities)->capture_default_str();
    validate_cmd->add_option("--seed", vopts.seed)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return cmd_run(run_args);
        if (*bench_cmd) return cmd_bench(bench_args);
        if (*oracle_cmd) return cmd_oracle(oracle_args);
        if (*validate_cmd) return cmd_validate(vopts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
