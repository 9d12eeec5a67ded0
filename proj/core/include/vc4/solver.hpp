#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vc4/graph.hpp"
#include "vc4/reductions.hpp"
#include "vc4/trace.hpp"

namespace vc4 {

/// deg3: the max-degree-3 rule ladder (Rules 1-6). deg4: Rules 1-5, 7-12.
enum class Regime { Deg3, Deg4 };

enum class AssertMode { Abort, Warn };

struct Instance {
    Graph graph;
    int k = 0;
};

/// mu = 3k - n, i.e. three times the above-guarantee parameter k - n/3.
inline int measure_thirds(const Graph &g, int k) { return 3 * k - static_cast<int>(g.num_vertices()); }
inline int measure_thirds(const Instance &inst) { return measure_thirds(inst.graph, inst.k); }

/// ceil(2n / (2 + maxdeg)); a lower bound on the minimum cover of a graph with
/// minimum degree >= 2. Throws std::invalid_argument below minimum degree 2.
int lower_bound_guarantee(const Graph &g);

/// Forces the degree-2 fold of `v` right after this branch's set is deleted.
/// `witnesses` must contain a vertex of degree 3 after the fold.
struct ForcedFold {
    VertexId v = -1;
    VertexSet witnesses;
};

struct BranchSet {
    VertexSet s;
    bool marked = false;
    std::optional<ForcedFold> forced_fold;
};

struct Decision {
    bool yes = false;
    std::optional<VertexSet> cover;
};

/// The rule that fires plus the vertices it names.
struct RuleChoice {
    RuleId rule = RuleId::R1;
    VertexId v = -1, u = -1, w = -1, x = -1, z = -1, t = -1;
};

/// Minimum per-branch decrease (thirds) a rule's branching must achieve.
/// Empty for rules with only the generic per-branch bound.
std::vector<int> required_decreases(RuleId rule);

class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SolverOptions {
    AssertMode mode = AssertMode::Abort;
    TraceSink *sink = nullptr;
    int max_marked_depth = 64;
};

struct SolverStats {
    std::map<RuleId, long> rule_counts;
    /// Element-wise minimum of every decrease vector recorded for a rule.
    std::map<RuleId, std::vector<int>> worst_decreases;
    long branching_events = 0;  // step-3 events with at least two branches
    long leaves = 0;            // vcbase calls answered by Rule 1 or Rule 2
    long vcbase_calls = 0;
    long forced_folds = 0;
    long extended_crowns = 0;
    int max_marked_depth = 0;
    long violations = 0;
    std::vector<std::string> messages;  // first few violations
    std::optional<int> mu0;             // measure at the last top-level solve
};

class Solver {
public:
    explicit Solver(SolverOptions options = {}) : options_(options) {}

    /// Decides whether `g` (max degree <= 4) has a cover of size <= k.
    Decision decide(const Graph &g, int k, bool want_cover = false);

    /// Component wrapper: per-component budget search, then recursion on the rest.
    Decision wrapper(const Instance &inst, Regime regime);
    /// The rule ladder on one instance.
    Decision base(const Instance &inst, Regime regime, bool initial);
    /// Procedure Branch with one entry per branching set.
    Decision branch(const Instance &inst, const std::vector<BranchSet> &sets, Regime regime, RuleId origin);

    RuleChoice select_rule(const Instance &inst, Regime regime) const;

    const SolverStats &stats() const { return stats_; }
    void reset_stats() { stats_ = {}; }

private:
    Decision branch_impl(const Instance &inst, const std::vector<BranchSet> &sets, Regime regime, RuleId origin,
                         int depth);
    Decision continue_after(Graph g, int k, const Journal &journal, Regime regime, RuleId origin);
    Decision record_reduction(RuleId rule, int mu_before, const CrownStep &step, const Journal &journal,
                              Regime regime, bool ok, std::string detail);
    void check_invariants(const Instance &inst, Regime regime);
    void emit(const TraceEvent &event);
    void violation(const std::string &message);

    SolverOptions options_;
    SolverStats stats_;
};

Decision vc_decide(const Graph &g, int k, bool want_cover = false, SolverOptions options = {});

/// Smallest k for which the solver answers yes, searched upward from the
/// degree lower bound of the preprocessed graph.
int minimum_cover_size(const Graph &g, SolverOptions options = {});

}  // namespace vc4
