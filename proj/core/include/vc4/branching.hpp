#pragma once

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace vc4 {

/// Root x >= 1 of sum_i x^(-a_i) = 1 for a branching vector with positive
/// entries. A single-entry vector has root 1. Throws std::invalid_argument on
/// an empty vector or a non-positive entry.
double branching_number(std::span<const double> vector);

/// Same, with entries given in thirds.
double branching_number_thirds(std::span<const int> thirds);

/// Parses "5/3,3,7/3" style lists (integers or fractions).
std::vector<double> parse_branching_vector(std::string_view text);

}  // namespace vc4
