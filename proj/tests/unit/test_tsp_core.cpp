#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tspga/instance.hpp"
#include "tspga/tour.hpp"
#include "tspga/tsplib.hpp"

using namespace tspga;

namespace {

const std::string kTriangle =
    "NAME : tri\nTYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\n"
    "NODE_COORD_SECTION\n1 0 0\n2 3 0\n3 0 4\nEOF\n";

std::string data(const char* file) { return std::string(TSPGA_DATA_DIR) + "/tsplib/" + file; }

}  // namespace

TEST_SUITE("instance") {
    TEST_CASE("3-4-5 triangle under the raw metric") {
        const Instance inst = parse_tsplib_string(kTriangle, Metric::kRawEuc2d);
        CHECK(inst.size() == 3);
        CHECK(inst.name() == "tri");
        CHECK(inst.distance(0, 1) == 3.0);
        CHECK(inst.distance(0, 2) == 4.0);
        CHECK(inst.distance(1, 2) == 5.0);
    }

    TEST_CASE("distance basics") {
        CHECK(euclidean({0, 0}, {3, 4}, Metric::kRawEuc2d) == 5.0);
        CHECK(euclidean({0, 0}, {1, 1}, Metric::kRoundedEuc2d) == 1.0);
        CHECK(euclidean({0, 0}, {1, 1}, Metric::kRawEuc2d) == doctest::Approx(std::sqrt(2.0)));
        const Instance inst = random_instance(20, 3);
        for (int i = 0; i < inst.size(); ++i) {
            CHECK(inst.distance(i, i) == 0.0);
            for (int j = 0; j < inst.size(); ++j) CHECK(inst.distance(i, j) == inst.distance(j, i));
        }
    }

    TEST_CASE("out-of-range lookups throw") {
        const Instance inst = random_instance(5, 1);
        CHECK_THROWS_AS((void)inst.distance(0, 5), std::out_of_range);
        CHECK_THROWS_AS((void)inst.distance(-1, 0), std::out_of_range);
    }

    TEST_CASE("constructor preconditions") {
        CHECK_THROWS((void)Instance("x", {{0, 0}, {1, 1}}));
        CHECK_THROWS((void)Instance::from_matrix("x", 3, {0, 1, 2, 1, 0, 3, 2, 4, 0}));
        CHECK_THROWS((void)Instance::from_matrix("x", 3, {1, 1, 2, 1, 0, 3, 2, 3, 0}));
        CHECK_NOTHROW((void)Instance::from_matrix("x", 3, {0, 1, 2, 1, 0, 3, 2, 3, 0}));
    }

    TEST_CASE("with_metric switches rounding") {
        const Instance raw("sq", {{0, 0}, {1, 1}, {2, 0}}, Metric::kRawEuc2d);
        CHECK(raw.with_metric(Metric::kRoundedEuc2d).distance(0, 1) == 1.0);
        CHECK_THROWS((void)oracle::nine_city_table().with_metric(Metric::kRawEuc2d));
    }

    TEST_CASE("random instances are reproducible") {
        const Instance a = random_instance(30, 9);
        const Instance b = random_instance(30, 9);
        for (int i = 0; i < 30; ++i) {
            CHECK(a.coords()[static_cast<std::size_t>(i)].x == b.coords()[static_cast<std::size_t>(i)].x);
        }
    }
}

TEST_SUITE("tsplib") {
    TEST_CASE("bundled instances load with published sizes") {
        CHECK(load_tsplib(data("berlin52.tsp")).size() == 52);
        CHECK(load_tsplib(data("eil51.tsp")).size() == 51);
    }

    TEST_CASE("published optimal tours cost the published optimum") {
        const Instance eil = load_tsplib(data("eil51.tsp"));
        const Tour eil_opt = load_tour(data("eil51.opt.tour"));
        CHECK(validate_tour(eil, eil_opt).empty());
        CHECK(tour_cost(eil, eil_opt) == 426.0);
        CHECK(oracle::cycle_cost(eil, eil_opt) == 426.0);

        const Instance berlin = load_tsplib(data("berlin52.tsp"));
        const Tour berlin_opt = load_tour(data("berlin52.opt.tour"));
        CHECK(tour_cost(berlin, berlin_opt) == 7542.0);
    }

    TEST_CASE("round trip through write_tsplib") {
        const Instance a = random_instance(12, 4);
        std::ostringstream out;
        write_tsplib(out, a);
        const Instance b = parse_tsplib_string(out.str());
        REQUIRE(b.size() == 12);
        for (int i = 0; i < 12; ++i) {
            for (int j = 0; j < 12; ++j) CHECK(a.distance(i, j) == b.distance(i, j));
        }
    }

    TEST_CASE("informational keys are ignored") {
        const std::string text =
            "NAME: t\nCOMMENT: hello : world\nTYPE: TSP\nDIMENSION: 3\n"
            "EDGE_WEIGHT_TYPE: EUC_2D\nDISPLAY_DATA_TYPE: COORD_DISPLAY\n"
            "NODE_COORD_SECTION\n1 0 0\n2 3 0\n3 0 4\n";
        CHECK(parse_tsplib_string(text).size() == 3);
    }

    TEST_CASE("malformed files report a line") {
        const char* bad[] = {
            "NAME: t\nTYPE: ATSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n",
            "NAME: t\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: GEO\nNODE_COORD_SECTION\n",
            "NAME: t\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\n2 x 0\n3 0 4\n",
            "NAME: t\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\n1 1 0\n3 0 4\n",
            "NAME: t\nTYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\n2 1 0\n3 0 4\nEOF\n",
            "NAME: t\nTYPE: TSP\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\n",
        };
        for (const char* text : bad) CHECK_THROWS_AS((void)parse_tsplib_string(text), ParseError);
    }

    TEST_CASE("missing file") {
        CHECK_THROWS((void)load_tsplib("/nonexistent/nothing.tsp"));
    }

    TEST_CASE("tour files are rotated to start at city 0") {
        std::istringstream in("NAME: x\nTYPE: TOUR\nDIMENSION: 4\nTOUR_SECTION\n3\n4\n1\n2\n-1\nEOF\n");
        const Tour t = parse_tour(in);
        CHECK(t == Tour({0, 1, 2, 3}));
    }
}

TEST_SUITE("tour") {
    TEST_CASE("perimeter of the 3-4-5 triangle") {
        const Instance inst = parse_tsplib_string(kTriangle, Metric::kRawEuc2d);
        CHECK(tour_cost(inst, Tour({0, 1, 2})) == 12.0);
    }

    TEST_CASE("validation kinds") {
        CHECK(validate_tour(4, std::vector<City>{0, 1, 2, 3}).empty());
        const auto dup = validate_tour(4, std::vector<City>{0, 1, 1, 3});
        REQUIRE_FALSE(dup.empty());
        CHECK(std::any_of(dup.begin(), dup.end(), [](const auto& v) {
            return v.kind == TourViolation::Kind::kDuplicateCity;
        }));
        const auto start = validate_tour(4, std::vector<City>{1, 0, 2, 3});
        REQUIRE_FALSE(start.empty());
        CHECK(start.front().kind == TourViolation::Kind::kFixedStart);
        CHECK(validate_tour(4, std::vector<City>{0, 1, 2}).front().kind ==
              TourViolation::Kind::kWrongLength);
        CHECK(validate_tour(4, std::vector<City>{0, 1, 2, 7}).front().kind ==
              TourViolation::Kind::kCityOutOfRange);
        CHECK_FALSE(is_valid_tour(4, std::vector<City>{0, 1, 1, 3}));
    }

    TEST_CASE("rotations and reversals of a closed tour cost the same") {
        std::mt19937 gen(11);
        const Instance inst = random_instance(6, 17);
        std::vector<City> order{0, 1, 2, 3, 4, 5};
        do {
            const double base = oracle::cycle_cost(inst, order);
            for (int r = 1; r < 6; ++r) {
                std::vector<City> rot = order;
                std::rotate(rot.begin(), rot.begin() + r, rot.end());
                CHECK(tour_cost(inst, rot) == doctest::Approx(base));
            }
            std::vector<City> rev(order.rbegin(), order.rend());
            CHECK(tour_cost(inst, rev) == doctest::Approx(base));
        } while (std::next_permutation(order.begin() + 1, order.end()));
    }

    TEST_CASE("evaluated tours cache the recomputed cost") {
        std::mt19937 gen(5);
        const Instance inst = random_instance(25, 2);
        for (int i = 0; i < 50; ++i) {
            const auto order = oracle::random_order(25, gen);
            const EvaluatedTour e(inst, Tour(order));
            CHECK(e.cost() == doctest::Approx(oracle::cycle_cost(inst, order)));
        }
    }

    TEST_CASE("position lookups and hashing") {
        const Tour t({0, 3, 1, 2});
        CHECK(t.position_of(1) == 2);
        CHECK_THROWS((void)t.position_of(9));
        CHECK(TourHash{}(t) == TourHash{}(Tour({0, 3, 1, 2})));
        CHECK(TourHash{}(t) != TourHash{}(Tour({0, 1, 3, 2})));
        CHECK(to_string(t) == "0 3 1 2");
    }

    TEST_CASE("sort_by_cost is stable") {
        const Instance inst = Instance("sq", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, Metric::kRawEuc2d);
        std::vector<EvaluatedTour> v{EvaluatedTour(inst, Tour({0, 1, 3, 2})),
                                     EvaluatedTour(inst, Tour({0, 1, 2, 3})),
                                     EvaluatedTour(inst, Tour({0, 3, 2, 1}))};
        sort_by_cost(v);
        CHECK(v[0].tour() == Tour({0, 1, 2, 3}));
        CHECK(v[1].tour() == Tour({0, 3, 2, 1}));
        CHECK(v[2].tour() == Tour({0, 1, 3, 2}));
    }
}
