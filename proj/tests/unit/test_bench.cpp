#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tspga/bench.hpp"
#include "tspga/csv.hpp"
#include "tspga/oracle.hpp"
#include "tspga/tsplib.hpp"

using namespace tspga;
namespace fs = std::filesystem;

namespace {

const fs::path kTsplib = fs::path(TSPGA_DATA_DIR) / "tsplib";

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "tspga_test_bench";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

#ifdef TSPGA_CLI
struct CliResult {
    int status;
    std::string out;
};

CliResult cli(const std::string& args) {
    const std::string cmd = std::string(TSPGA_CLI) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe.release());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}
#endif

}  // namespace

TEST_SUITE("brute force") {
    TEST_CASE("triangle and square") {
        const Instance tri("tri", {{0, 0}, {3, 0}, {0, 4}}, Metric::kRawEuc2d);
        CHECK(brute_force_optimal(tri).cost == 12.0);
        const Instance sq("sq", {{0, 0}, {1, 1}, {1, 0}, {0, 1}}, Metric::kRawEuc2d);
        const OptimalTour opt = brute_force_optimal(sq);
        CHECK(opt.cost == 4.0);
        CHECK(opt.tour == Tour({0, 2, 1, 3}));
    }

    TEST_CASE("agrees with subset dynamic programming") {
        for (int i = 0; i < 50; ++i) {
            const int n = 5 + i % 6;
            const Instance inst = random_instance(n, 100 + static_cast<unsigned long long>(i));
            const OptimalTour opt = brute_force_optimal(inst);
            CHECK(opt.cost == oracle::held_karp(inst));
            CHECK(oracle::cycle_cost(inst, opt.tour) == opt.cost);
        }
        const Instance nine = random_instance(9, 4242, 1000.0, Metric::kRawEuc2d);
        CHECK(brute_force_optimal(nine).cost == doctest::Approx(oracle::held_karp(nine)));
    }

    TEST_CASE("ties resolve to the lexicographically smallest tour") {
        // Regular pentagon-free case: a square with its two diagonals equal
        // has three distinct cycles; only one is optimal, so use an
        // all-equal table where every tour ties.
        std::vector<double> table(36, 1.0);
        for (int i = 0; i < 6; ++i) table[static_cast<std::size_t>(i * 7)] = 0.0;
        const Instance eq = Instance::from_matrix("eq", 6, table);
        CHECK(brute_force_optimal(eq).tour == Tour::identity(6));
    }

    TEST_CASE("refuses large instances") {
        CHECK_THROWS_AS((void)brute_force_optimal(random_instance(12, 1)), std::invalid_argument);
    }
}

TEST_SUITE("csv") {
    TEST_CASE("fixed six decimals") {
        CHECK(format_fixed6(426.0) == "426.000000");
        CHECK(format_fixed6(0.1234567) == "0.123457");
        CHECK(format_fixed6(-2.5) == "-2.500000");
    }

    TEST_CASE("convergence round trip") {
        const std::vector<ConvergenceRecord> h{{1, 500.0, 612.25}, {2, 480.0, 590.5}, {3, 480.0, 570.125}};
        std::ostringstream out;
        write_convergence_csv(out, h);
        const std::string text = out.str();
        CHECK(std::count(text.begin(), text.end(), '\n') == 4);
        CHECK(text.back() == '\n');
        CHECK(text.rfind("generation,best_cost,mean_cost\n", 0) == 0);
        std::istringstream in(text);
        CHECK(read_convergence_csv(in) == h);
    }

    TEST_CASE("history from a run survives the round trip") {
        GAConfig cfg;
        cfg.population_size = 16;  // means are multiples of 1/16, exact in six decimals
        cfg.max_generations = 30;
        const RunResult r = run(cfg, random_instance(20, 3));
        const fs::path p = scratch("roundtrip.csv");
        write_convergence_csv(p, r.history);
        const auto back = read_convergence_csv(p);
        CHECK(back == r.history);
        for (std::size_t i = 1; i < back.size(); ++i) CHECK(back[i].best_cost <= back[i - 1].best_cost);
    }

    TEST_CASE("errors") {
        std::ostringstream out;
        CHECK_THROWS_AS(write_convergence_csv(out, {}), std::invalid_argument);
        CHECK_THROWS(write_convergence_csv(fs::path("/nonexistent/dir/x.csv"), {{1, 1, 1}}));
        std::istringstream bad("generation,best_cost,mean_cost\n1,abc,2\n");
        CHECK_THROWS((void)read_convergence_csv(bad));
        std::istringstream nohdr("1,2,3\n");
        CHECK_THROWS((void)read_convergence_csv(nohdr));
    }

    TEST_CASE("usage log") {
        std::ostringstream out;
        write_usage_csv(out, {{3, "sbm", "swglm", 431.0}});
        CHECK(out.str() == "generation,strategy,operator,child_cost\n3,sbm,swglm,431.000000\n");
    }
}

TEST_SUITE("presets") {
    TEST_CASE("table parameters") {
        const auto t31 = find_preset("3.1");
        REQUIRE(t31);
        CHECK(t31->population_size == 200);
        CHECK(t31->max_generations == 8000);
        CHECK(t31->crossover_rate == 1.0);
        CHECK(t31->mutation_rate == 0.0);
        CHECK(t31->combinations.size() == 5);
        CHECK(t31->instances.size() == 11);
        CHECK(find_preset("3.2")->population_size == 100);
        const auto t41 = find_preset("4.1");
        CHECK(t41->crossover_rate == 0.0);
        CHECK(t41->mutation_rate == 1.0);
        CHECK(t41->combinations.size() == 4);
        CHECK(find_preset("4.2")->population_size == 100);
        const auto t51 = find_preset("5.1");
        CHECK(t51->combinations.size() == 12);
        CHECK(t51->max_generations == 1600);
        CHECK(t51->population_size == 100);
        CHECK_FALSE(find_preset("9.9"));
    }

    TEST_CASE("published optima") {
        CHECK(known_optimum("eil51") == 426.0);
        CHECK(known_optimum("berlin52") == 7542.0);
        CHECK(known_optimum("a280") == 2579.0);
        CHECK_FALSE(known_optimum("random51_1"));
    }

    TEST_CASE("median and scaling") {
        CHECK(median({5, 1, 3}) == 3.0);
        CHECK(median({4, 1, 3, 2}) == 2.5);
        CHECK_THROWS((void)median({}));
        ExperimentSpec spec;
        spec.preset = *find_preset("5.1");
        spec.scale = 0.1;
        CHECK(scaled_generations(spec) == 160);
        spec.scale = 1e-9;
        CHECK(scaled_generations(spec) == 1);
        spec.runs = 0;
        CHECK_THROWS(validate_spec(spec));
    }

    TEST_CASE("instance resolution") {
        CHECK(resolve_instance("eil51", kTsplib).size() == 51);
        CHECK(resolve_instance((kTsplib / "berlin52.tsp").string(), "/nowhere").size() == 52);
        const Instance r = resolve_instance("random:40:3", kTsplib);
        CHECK(r.size() == 40);
        CHECK(r.name() == "random40_3");
        CHECK_THROWS((void)resolve_instance("random:2:3", kTsplib));
        CHECK_THROWS((void)resolve_instance("random:x", kTsplib));
        CHECK_THROWS((void)resolve_instance("nope", kTsplib));
    }
}

TEST_SUITE("experiments") {
    ExperimentSpec small_spec() {
        ExperimentSpec spec;
        spec.preset = *find_preset("5.1");
        spec.preset.combinations.resize(2);
        spec.instances = {"eil51", "random:20:1", "missing_instance"};
        spec.runs = 3;
        spec.scale = 0.005;  // 8 generations
        spec.tsplib_dir = kTsplib;
        return spec;
    }

    TEST_CASE("result table layout") {
        const ResultTable t = run_experiment(small_spec());
        CHECK(t.rows.size() == 4);
        REQUIRE(t.skipped.size() == 1);
        CHECK(t.skipped[0].rfind("missing_instance", 0) == 0);
        std::ostringstream out;
        write_result_table(out, t);
        std::istringstream in(out.str());
        std::string header, first;
        std::getline(in, header);
        std::getline(in, first);
        CHECK(header == "instance,cities,combination,seed_1,seed_2,seed_3,median,optimum");
        CHECK(first.rfind("eil51,51,Exchange+Modified,", 0) == 0);
        CHECK(first.substr(first.size() - 4) == ",426");
        for (const auto& row : t.rows) {
            CHECK(row.median == median(row.best_costs));
            if (row.optimum) {
                for (double c : row.best_costs) CHECK(c >= *row.optimum);
            }
        }
    }

    TEST_CASE("rat783 needs an explicit opt-in") {
        ExperimentSpec spec = small_spec();
        spec.instances = {"rat783"};
        const ResultTable t = run_experiment(spec);
        CHECK(t.rows.empty());
        REQUIRE(t.skipped.size() == 1);
        CHECK(t.skipped[0].find("include-rat783") != std::string::npos);
    }

    TEST_CASE("undercutting a known optimum is refused") {
        ResultTable t;
        t.runs = 1;
        t.rows.push_back({"eil51", 51, "x", {400.0}, 400.0, 426.0});
        std::ostringstream out;
        CHECK_THROWS_AS(write_result_table(out, t), std::logic_error);
    }

    TEST_CASE("identical specs write identical bytes") {
        ExperimentSpec spec = small_spec();
        spec.convergence_dir = scratch("conv_a");
        write_result_table(scratch("a.csv"), run_experiment(spec));
        spec.convergence_dir = scratch("conv_b");
        write_result_table(scratch("b.csv"), run_experiment(spec));
        CHECK(slurp(scratch("a.csv")) == slurp(scratch("b.csv")));
        int files = 0;
        for (const auto& e : fs::directory_iterator(scratch("conv_a"))) {
            ++files;
            CHECK(slurp(e.path()) == slurp(scratch("conv_b") / e.path().filename()));
        }
        CHECK(files == 12);
    }
}

#ifdef TSPGA_CLI
TEST_SUITE("cli") {
    TEST_CASE("run writes one row per generation") {
        const auto r = cli("run --instance " + (kTsplib / "eil51.tsp").string() +
                           " --crossover sbc --mutation none --pc 1.0 --pm 0.0 --pop 20 --gens 30 --seed 7");
        CHECK(r.status == 0);
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 31);
    }

    TEST_CASE("oracle matches the exhaustive optimum") {
        const auto r = cli("oracle --instance " + (kTsplib / "tiny8.tsp").string());
        CHECK(r.status == 0);
        const double hk = oracle::held_karp(load_tsplib(kTsplib / "tiny8.tsp"));
        CHECK(r.out.rfind("cost " + format_fixed6(hk) + "\n", 0) == 0);
    }

    TEST_CASE("bad input gives a nonzero exit") {
        CHECK(cli("run --instance nowhere.tsp").status != 0);
        CHECK(cli("run --instance random:10:1 --crossover ox").status != 0);
        CHECK(cli("run --instance random:10:1 --pop 1").status != 0);
        CHECK(cli("run --instance random:10:1 --bogus").status != 0);
        CHECK(cli("bench --table 7.7").status != 0);
        CHECK(cli("oracle --instance random:12:1").status != 0);
        CHECK(cli("").status != 0);
    }

    TEST_CASE("validate passes on a short run") {
        const auto r = cli("validate --trials 200 --max-n 20");
        CHECK(r.status == 0);
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 17);
    }
}
#endif
