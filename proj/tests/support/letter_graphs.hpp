#pragma once

// Small coordinate instances for the lettered mutation walkthroughs. The
// published graphs are not legible, so each instance is laid out to make the
// walkthrough's stated worst city, nearest city and best candidate hold.
// Letters map to cities A=0, B=1, C=2, D=3, E=4, F=5, H=6.

#include <string>
#include <vector>

#include "tspga/instance.hpp"
#include "tspga/tour.hpp"

namespace letters {

enum : int { A = 0, B = 1, C = 2, D = 3, E = 4, F = 5, H = 6 };

inline tspga::Tour tour(std::initializer_list<int> cities) {
    return tspga::Tour(std::vector<int>(cities));
}

inline std::string name(const tspga::Tour& t) {
    static const char kLetters[] = "ABCDEFH";
    std::string s;
    for (int c : t.cities()) s += kLetters[c];
    return s;
}

// A B E D C: the E-D edge is the longest open edge, so D is worst.
inline tspga::Instance example1() {
    return tspga::Instance("ex1", {{0, 0}, {1, 0}, {10, 1}, {10, 0}, {2, 0}},
                           tspga::Metric::kRawEuc2d);
}

// A B E H F D C: D sits far away, so its left+right sum dominates.
inline tspga::Instance example2() {
    return tspga::Instance("ex2", {{0, 0}, {1, 0}, {2, 1}, {50, 0}, {2, 0}, {3, 0}, {3, 1}},
                           tspga::Metric::kRawEuc2d);
}

// A B F D E C H: F is the far outlier and E its nearest city.
inline tspga::Instance example3() {
    return tspga::Instance("ex3", {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {45, 0}, {50, 0}, {1, 1}},
                           tspga::Metric::kRawEuc2d);
}

// A B F E H D C: E is the outlier; swapping E with its right neighbour is cheaper.
inline tspga::Instance example4() {
    return tspga::Instance("ex4", {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {50, 0}, {2, 0}, {2, 1}},
                           tspga::Metric::kRawEuc2d);
}

// A B E D C: B-E is the longest open edge; C lies between B and E.
inline tspga::Instance example5() {
    return tspga::Instance("ex5", {{0, 0}, {1, 0}, {5, 0}, {5, 5}, {10, 0}},
                           tspga::Metric::kRawEuc2d);
}

}  // namespace letters
