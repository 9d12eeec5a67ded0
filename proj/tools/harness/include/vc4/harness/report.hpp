#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "vc4/solver.hpp"

namespace vc4::harness {

/// Worst-case growth constant of the degree-4 algorithm.
inline constexpr double kGrowthBase = 1.6253;
/// Leaves may exceed kGrowthBase^r by at most this factor.
inline constexpr double kGrowthSlack = 25.0;

/// leaves / kGrowthBase^max(mu0 / 3, 0).
double bound_ratio(long leaves, int mu0);

struct InstanceReport {
    std::string name;
    int n = 0;
    int min_cover = -1;
    long max_leaves = 0;
    double max_ratio = 0.0;
    int worst_k = -1;
    long violations = 0;
};

/// Aggregated solver statistics over a corpus run.
struct Report {
    std::map<std::string, long> rule_counts;
    std::map<std::string, std::vector<int>> worst_decreases;
    long branching_events = 0;
    long leaves = 0;
    long solves = 0;
    long violations = 0;
    double max_ratio = 0.0;
    std::vector<std::string> messages;
    std::vector<InstanceReport> instances;

    /// Folds in the stats of one solve; returns its bound ratio.
    double add_solve(const SolverStats &stats);
    bool ok() const { return violations == 0 && max_ratio <= kGrowthSlack; }
    nlohmann::ordered_json to_json() const;
};

}  // namespace vc4::harness
