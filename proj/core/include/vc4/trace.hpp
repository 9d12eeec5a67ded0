#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vc4 {

enum class RuleId {
    R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12,
    C1,      // proper crown found inside procedure Branch
    C2,      // almost crown with dependent H
    C3,      // almost crown with independent H, merged
    Marked,  // recursive Branch on (H marked, N(H))
};

std::string_view to_string(RuleId rule);

enum class TraceKind {
    Branch,     // step 3 of procedure Branch
    Reduce,     // a measure-changing reduction (fold, crown rule)
    Invariant,  // a failed vcbase invariant check
};

/// One record per branching step or reduction. Measure values are in thirds
/// (mu = 3k - n).
struct TraceEvent {
    TraceKind kind = TraceKind::Branch;
    RuleId rule = RuleId::R1;
    int mu_before = 0;
    /// Branch: per-branch decrease. Reduce: single entry, mu_before - mu_after.
    std::vector<int> decreases;
    std::vector<bool> marked;
    bool ok = true;
    std::string detail;
};

class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void record(const TraceEvent &event) = 0;
};

}  // namespace vc4
