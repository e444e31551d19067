#pragma once

/// @file tsplib.hpp
/// @brief Reader for the TSPLIB `.tsp` (EUC_2D node coordinates) and `.tour` formats.

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "tspga/instance.hpp"
#include "tspga/tour.hpp"

namespace tspga {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

/// Parses a TSPLIB TSP file. File ids 1..n become cities 0..n-1.
[[nodiscard]] Instance parse_tsplib(std::istream& in, Metric metric = Metric::kRoundedEuc2d);
[[nodiscard]] Instance parse_tsplib_string(const std::string& text,
                                           Metric metric = Metric::kRoundedEuc2d);
[[nodiscard]] Instance load_tsplib(const std::filesystem::path& path,
                                   Metric metric = Metric::kRoundedEuc2d);

/// Parses a TSPLIB TOUR file into a fixed-start tour (rotated so city 0 leads).
[[nodiscard]] Tour parse_tour(std::istream& in);
[[nodiscard]] Tour load_tour(const std::filesystem::path& path);

/// Writes an instance back out in TSPLIB EUC_2D form.
void write_tsplib(std::ostream& out, const Instance& inst);

}  // namespace tspga
