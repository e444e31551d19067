#include "tspga/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace tspga {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

void check_written(const std::ofstream& out, const std::filesystem::path& path) {
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

template <typename T>
T parse_field(std::string_view s, int line) {
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error("line " + std::to_string(line) + ": bad number '" +
                                 std::string(s) + "'");
    }
    return value;
}

}  // namespace

std::string format_fixed6(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
    if (ec != std::errc()) throw std::runtime_error("number too large to format");
    return std::string(buf, ptr);
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRecord>& history) {
    if (history.empty()) throw std::invalid_argument("empty convergence history");
    out << "generation,best_cost,mean_cost\n";
    for (const auto& r : history) {
        out << r.generation << ',' << format_fixed6(r.best_cost) << ','
            << format_fixed6(r.mean_cost) << '\n';
    }
}

void write_convergence_csv(const std::filesystem::path& path,
                           const std::vector<ConvergenceRecord>& history) {
    auto out = open_for_write(path);
    write_convergence_csv(out, history);
    check_written(out, path);
}

std::vector<ConvergenceRecord> read_convergence_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "generation,best_cost,mean_cost") {
        throw std::runtime_error("line 1: missing convergence header");
    }
    std::vector<ConvergenceRecord> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto a = line.find(',');
        const auto b = a == std::string::npos ? a : line.find(',', a + 1);
        if (b == std::string::npos) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 3 fields");
        }
        const std::string_view v(line);
        out.push_back({parse_field<int>(v.substr(0, a), line_no),
                       parse_field<double>(v.substr(a + 1, b - a - 1), line_no),
                       parse_field<double>(v.substr(b + 1), line_no)});
    }
    return out;
}

std::vector<ConvergenceRecord> read_convergence_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_convergence_csv(in);
}

void write_usage_csv(std::ostream& out, const std::vector<OperatorUsage>& usage) {
    out << "generation,strategy,operator,child_cost\n";
    for (const auto& u : usage) {
        out << u.generation << ',' << u.strategy << ',' << u.op << ','
            << format_fixed6(u.child_cost) << '\n';
    }
}

void write_usage_csv(const std::filesystem::path& path, const std::vector<OperatorUsage>& usage) {
    auto out = open_for_write(path);
    write_usage_csv(out, usage);
    check_written(out, path);
}

}  // namespace tspga
