#include "tspga/tsplib.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

namespace tspga {
namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// strtod honours the C locale; from_chars does not, which is what a file format wants.
std::optional<double> to_double(const std::string& s) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (!s.empty() && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) return std::nullopt;
    return v;
}

std::optional<long long> to_int(const std::string& s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

// Splits "KEY : VALUE" (colon optional for section markers).
std::pair<std::string, std::string> split_key(const std::string& line) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) return {upper(trim(line)), {}};
    return {upper(trim(line.substr(0, colon))), trim(line.substr(colon + 1))};
}

}  // namespace

Instance parse_tsplib(std::istream& in, Metric metric) {
    std::string name = "unnamed";
    std::optional<long long> dimension;
    std::vector<Point> coords;
    std::vector<char> seen;
    bool in_coords = false;
    long long read_count = 0;
    int line_no = 0;
    std::string raw;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (in_coords) {
            const auto first = upper(split_ws(line).front());
            if (first == "EOF") break;
            const auto toks = split_ws(line);
            if (!std::isdigit(static_cast<unsigned char>(toks.front()[0]))) {
                // A new keyword section ends the coordinate block.
                in_coords = false;
            } else {
                if (toks.size() != 3) {
                    throw ParseError(line_no, "expected 'id x y', got '" + line + "'");
                }
                const auto id = to_int(toks[0]);
                if (!id) throw ParseError(line_no, "non-integer node id '" + toks[0] + "'");
                const auto x = to_double(toks[1]);
                const auto y = to_double(toks[2]);
                if (!x || !y) throw ParseError(line_no, "non-numeric coordinate in '" + line + "'");
                if (*id < 1 || *id > *dimension) {
                    throw ParseError(line_no, "node id " + toks[0] + " outside 1.." +
                                                  std::to_string(*dimension));
                }
                const auto idx = static_cast<std::size_t>(*id - 1);
                if (seen[idx]) throw ParseError(line_no, "duplicate node id " + toks[0]);
                seen[idx] = 1;
                coords[idx] = Point{*x, *y};
                ++read_count;
                continue;
            }
        }

        const auto [key, value] = split_key(line);
        if (key == "EOF") break;
        if (key == "NAME") {
            name = value;
        } else if (key == "TYPE") {
            if (upper(value) != "TSP") {
                throw ParseError(line_no, "unsupported TYPE '" + value + "' (only TSP)");
            }
        } else if (key == "DIMENSION") {
            dimension = to_int(value);
            if (!dimension || *dimension < 3) {
                throw ParseError(line_no, "DIMENSION must be an integer >= 3, got '" + value + "'");
            }
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (upper(value) != "EUC_2D") {
                throw ParseError(line_no, "unsupported EDGE_WEIGHT_TYPE '" + value + "'");
            }
        } else if (key == "NODE_COORD_SECTION") {
            if (!dimension) throw ParseError(line_no, "NODE_COORD_SECTION before DIMENSION");
            coords.assign(static_cast<std::size_t>(*dimension), Point{});
            seen.assign(static_cast<std::size_t>(*dimension), 0);
            in_coords = true;
        } else if (key == "EDGE_WEIGHT_SECTION" || key == "EDGE_WEIGHT_FORMAT") {
            throw ParseError(line_no, "explicit edge weights are not supported");
        } else if (key == "COMMENT" || key == "NODE_COORD_TYPE" || key == "DISPLAY_DATA_TYPE" ||
                   key == "CAPACITY") {
            // informational
        } else if (line.find(':') == std::string::npos) {
            throw ParseError(line_no, "malformed header line '" + line + "'");
        }
    }

    if (!dimension) throw ParseError(line_no, "missing DIMENSION");
    if (read_count != *dimension) {
        throw ParseError(line_no, "DIMENSION " + std::to_string(*dimension) + " but " +
                                      std::to_string(read_count) + " coordinates");
    }
    return Instance(name, std::move(coords), metric);
}

Instance parse_tsplib_string(const std::string& text, Metric metric) {
    std::istringstream in(text);
    return parse_tsplib(in, metric);
}

Instance load_tsplib(const std::filesystem::path& path, Metric metric) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_tsplib(in, metric);
}

Tour parse_tour(std::istream& in) {
    std::optional<long long> dimension;
    std::vector<City> order;
    bool in_tour = false;
    int line_no = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (in_tour) {
            bool done = false;
            for (const auto& tok : split_ws(line)) {
                const auto v = to_int(tok);
                if (!v) throw ParseError(line_no, "non-integer tour entry '" + tok + "'");
                if (*v == -1) {
                    done = true;
                    break;
                }
                order.push_back(static_cast<City>(*v - 1));
            }
            if (done) break;
            continue;
        }
        const auto [key, value] = split_key(line);
        if (key == "EOF") break;
        if (key == "DIMENSION") dimension = to_int(value);
        if (key == "TOUR_SECTION") in_tour = true;
    }
    if (dimension && static_cast<long long>(order.size()) != *dimension) {
        throw ParseError(line_no, "tour has " + std::to_string(order.size()) +
                                      " entries, DIMENSION " + std::to_string(*dimension));
    }
    const auto zero = std::find(order.begin(), order.end(), 0);
    if (zero == order.end()) throw ParseError(line_no, "tour does not visit node 1");
    std::rotate(order.begin(), zero, order.end());
    Tour t(std::move(order));
    if (!is_valid_tour(t.size(), t.cities())) throw ParseError(line_no, "tour is not a permutation");
    return t;
}

Tour load_tour(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_tour(in);
}

void write_tsplib(std::ostream& out, const Instance& inst) {
    if (inst.metric() == Metric::kExplicit) {
        throw std::invalid_argument("explicit-table instance has no coordinates to write");
    }
    out << "NAME : " << inst.name() << "\nTYPE : TSP\nDIMENSION : " << inst.size()
        << "\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n";
    out << std::setprecision(17);
    int id = 1;
    for (const auto& p : inst.coords()) out << id++ << ' ' << p.x << ' ' << p.y << '\n';
    out << "EOF\n";
}

}  // namespace tspga
