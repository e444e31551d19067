#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tspga/bench.hpp"
#include "tspga/crossover.hpp"
#include "tspga/csv.hpp"
#include "tspga/ga.hpp"
#include "tspga/gene_analysis.hpp"
#include "tspga/mutation.hpp"
#include "tspga/oracle.hpp"
#include "tspga/tsplib.hpp"

namespace py = pybind11;
using namespace tspga;

namespace {

Tour to_tour(const std::vector<City>& order) { return Tour(order); }

std::vector<City> from_tour(const Tour& t) { return {t.cities().begin(), t.cities().end()}; }

Metric parse_metric(const std::string& name) {
    if (name == "rounded") return Metric::kRoundedEuc2d;
    if (name == "raw") return Metric::kRawEuc2d;
    throw py::value_error("metric must be 'rounded' or 'raw'");
}

CrossoverId crossover_id(const std::string& name) {
    const auto id = parse_crossover(name);
    if (!id) throw py::value_error("unknown crossover: " + name);
    return *id;
}

MutationId mutation_id(const std::string& name) {
    const auto id = parse_mutation(name);
    if (!id) throw py::value_error("unknown mutation: " + name);
    return *id;
}

py::dict run_ga(const Instance& inst, const std::string& crossover, const std::string& mutation,
                double pc, double pm, int pop, int gens, std::uint64_t seed, int tournament) {
    GAConfig cfg;
    const auto x = parse_crossover_choice(crossover);
    const auto m = parse_mutation_choice(mutation);
    if (!x) throw py::value_error("unknown crossover: " + crossover);
    if (!m) throw py::value_error("unknown mutation: " + mutation);
    cfg.crossover = *x;
    cfg.mutation = *m;
    cfg.crossover_rate = pc;
    cfg.mutation_rate = pm;
    cfg.population_size = pop;
    cfg.max_generations = gens;
    cfg.seed = seed;
    cfg.tournament_size = tournament;
    std::optional<RunResult> done;
    {
        py::gil_scoped_release release;
        done.emplace(run(cfg, inst));
    }
    const RunResult& r = *done;
    py::list history;
    for (const auto& h : r.history) history.append(py::make_tuple(h.generation, h.best_cost, h.mean_cost));
    py::dict out;
    out["tour"] = from_tour(r.best.tour());
    out["cost"] = r.best.cost();
    out["history"] = history;
    out["seconds"] = r.evolve_seconds;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Genetic algorithm operators and engine for the symmetric TSP";

    py::class_<Instance>(m, "Instance")
        .def(py::init([](std::string name, const std::vector<std::pair<double, double>>& xy,
                         const std::string& metric) {
                 std::vector<Point> pts;
                 pts.reserve(xy.size());
                 for (const auto& [x, y] : xy) pts.push_back({x, y});
                 return Instance(std::move(name), std::move(pts), parse_metric(metric));
             }),
             py::arg("name"), py::arg("coords"), py::arg("metric") = "rounded")
        .def_property_readonly("name", &Instance::name)
        .def_property_readonly("size", &Instance::size)
        .def("distance", &Instance::distance)
        .def("__len__", &Instance::size);

    m.def("load_tsplib", [](const std::filesystem::path& p, const std::string& metric) {
        return load_tsplib(p, parse_metric(metric));
    }, py::arg("path"), py::arg("metric") = "rounded");
    m.def("random_instance", [](int n, unsigned long long seed) { return random_instance(n, seed); },
          py::arg("n"), py::arg("seed"));

    m.def("tour_cost", [](const Instance& inst, const std::vector<City>& order) {
        return tour_cost(inst, order);
    });
    m.def("is_valid_tour", [](const std::vector<City>& order) {
        return is_valid_tour(static_cast<int>(order.size()), order);
    });

    m.def("worst_gene_left", [](const Instance& inst, const std::vector<City>& order) {
        const auto g = worst_gene_left(inst, to_tour(order));
        return py::make_tuple(g.index, g.score);
    });
    m.def("worst_gene_lr", [](const Instance& inst, const std::vector<City>& order) {
        const auto g = worst_gene_lr(inst, to_tour(order));
        return py::make_tuple(g.index, g.score);
    });

    m.def("crossover_names", [] {
        std::vector<std::string> out;
        for (auto id : kAllCrossovers) out.emplace_back(to_string(id));
        return out;
    });
    m.def("mutation_names", [] {
        std::vector<std::string> out;
        for (auto id : kAllMutations) out.emplace_back(to_string(id));
        return out;
    });

    m.def("crossover", [](const std::string& name, const Instance& inst, const std::vector<City>& p1,
                          const std::vector<City>& p2, std::uint64_t seed) {
        Rng rng = make_stream(seed, Stream::kCrossover);
        const auto kids = apply_crossover(crossover_id(name), inst, to_tour(p1), to_tour(p2), rng);
        return py::make_tuple(from_tour(kids.child1), from_tour(kids.child2));
    }, py::arg("name"), py::arg("instance"), py::arg("p1"), py::arg("p2"), py::arg("seed") = 1);

    m.def("mutate", [](const std::string& name, const Instance& inst, const std::vector<City>& t,
                       std::uint64_t seed) {
        Rng rng = make_stream(seed, Stream::kMutation);
        return from_tour(apply_mutation(mutation_id(name), inst, to_tour(t), rng));
    }, py::arg("name"), py::arg("instance"), py::arg("tour"), py::arg("seed") = 1);

    m.def("collision_velocities", [](double m1, double v1, double m2, double v2) {
        const auto v = collision_velocities(m1, v1, m2, v2);
        return py::make_tuple(v.v1, v.v2);
    });

    m.def("brute_force_optimal", [](const Instance& inst) {
        const auto opt = brute_force_optimal(inst);
        return py::make_tuple(from_tour(opt.tour), opt.cost);
    });

    m.def("run", &run_ga, py::arg("instance"), py::arg("crossover") = "modified",
          py::arg("mutation") = "exchange", py::arg("pc") = 0.83, py::arg("pm") = 0.02,
          py::arg("pop") = 100, py::arg("gens") = 2000, py::arg("seed") = 1,
          py::arg("tournament") = 2);

    m.def("known_optimum", [](const std::string& name) { return known_optimum(name); });
    m.def("preset_names", &preset_names);

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
