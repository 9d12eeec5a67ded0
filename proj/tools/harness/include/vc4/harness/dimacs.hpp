#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vc4/graph.hpp"

namespace vc4::harness {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses DIMACS edge format: "c ..." comments, one "p edge <n> <m>" header,
/// then "e <u> <v>" lines with 1-based ids. Duplicate edges and an edge count
/// that disagrees with the header are reported through `warnings`.
Graph parse_dimacs(std::string_view text, std::vector<std::string> *warnings = nullptr);

Graph read_dimacs_file(const std::filesystem::path &path, std::vector<std::string> *warnings = nullptr);

/// Live vertices are renumbered 1..n in ascending id order.
std::string write_dimacs(const Graph &g);

void write_dimacs_file(const std::filesystem::path &path, const Graph &g);

}  // namespace vc4::harness
