#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vc4/graph.hpp"

namespace vc4::harness {

enum class Profile { Mixed34, Regular3, Regular4 };

std::string_view to_string(Profile p);
std::optional<Profile> parse_profile(std::string_view text);

/// Random connected graph with minimum degree >= 2 and maximum degree <= 4.
/// mixed34 draws each degree from {2, 3, 4}; regular3/regular4 are regular.
/// Deterministic per (n, seed, profile). Throws std::invalid_argument for
/// n < 5 or an odd n with regular3.
Graph gen_bounded_degree(int n, std::uint64_t seed, Profile profile);

struct CorpusEntry {
    std::string name;
    Profile profile;
    std::uint64_t seed;
    Graph graph;
};

/// `count` instances cycling through the three profiles with n drawn from
/// [n_lo, n_hi] (odd n is nudged to even for regular3).
std::vector<CorpusEntry> make_corpus(int count, int n_lo, int n_hi, std::uint64_t seed);

}  // namespace vc4::harness
