#include "vc4/harness/report.hpp"

#include <algorithm>
#include <cmath>

namespace vc4::harness {

double bound_ratio(long leaves, int mu0) {
    return static_cast<double>(leaves) / std::pow(kGrowthBase, std::max(mu0 / 3.0, 0.0));
}

double Report::add_solve(const SolverStats &stats) {
    ++solves;
    for (auto [rule, count] : stats.rule_counts)
        rule_counts[std::string(to_string(rule))] += count;
    for (const auto &[rule, vec] : stats.worst_decreases) {
        auto &w = worst_decreases[std::string(to_string(rule))];
        if (w.empty())
            w = vec;
        else if (w.size() == vec.size())
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = std::min(w[i], vec[i]);
    }
    branching_events += stats.branching_events;
    leaves += stats.leaves;
    violations += stats.violations;
    for (const auto &m : stats.messages)
        if (messages.size() < 32)
            messages.push_back(m);
    double ratio = stats.mu0 ? bound_ratio(stats.leaves, *stats.mu0) : 0.0;
    max_ratio = std::max(max_ratio, ratio);
    return ratio;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["solves"] = solves;
    j["branching_events"] = branching_events;
    j["leaves"] = leaves;
    j["violations"] = violations;
    j["max_bound_ratio"] = max_ratio;
    j["bound_limit"] = kGrowthSlack;
    j["ok"] = ok();
    j["rule_counts"] = rule_counts;
    j["worst_decreases"] = worst_decreases;
    j["messages"] = messages;
    auto &arr = j["instances"] = nlohmann::ordered_json::array();
    for (const auto &inst : instances) {
        arr.push_back({{"name", inst.name},
                       {"n", inst.n},
                       {"min_cover", inst.min_cover},
                       {"max_leaves", inst.max_leaves},
                       {"max_bound_ratio", inst.max_ratio},
                       {"worst_k", inst.worst_k},
                       {"violations", inst.violations}});
    }
    return j;
}

}  // namespace vc4::harness
