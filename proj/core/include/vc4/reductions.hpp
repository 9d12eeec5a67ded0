#pragma once

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "vc4/graph.hpp"

namespace vc4 {

class ReductionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Journal events. Replaying them in order on the graph they were recorded
// against reproduces the reduced graph; walking them backwards lifts a cover
// of the reduced graph to a cover of the original.
struct BranchPick {
    VertexSet s;  // taken into the cover by a branching decision
};
struct CoverDelete {
    VertexSet h;  // deleted into the cover
};
struct Discard {
    VertexSet c;  // deleted, never needed in the cover
};
struct MergeFold {
    VertexId vstar;
    VertexSet c;
    VertexSet h;
};

using JournalEvent = std::variant<BranchPick, CoverDelete, Discard, MergeFold>;
using Journal = std::vector<JournalEvent>;

struct ReducedInstance {
    Graph graph;
    int k = 0;
    VertexSet c_removed;  // degree-0 deletions
    VertexSet h_removed;  // seed plus degree-1 neighbor deletions
};

/// Deletes `seed` into the cover, then applies the degree-0 and degree-1
/// rules until the graph is empty or has minimum degree 2. The lowest-id
/// qualifying vertex goes first and degree 0 is preferred over degree 1.
/// k may go negative.
std::pair<ReducedInstance, Journal> exhaust_low_degree(const Graph &g, int k, const VertexSet &seed);

struct CrownStep {
    Graph graph;
    int k = 0;
    VertexId vstar = -1;  // set by merge-type steps only
};

/// Deletes C and H, k -= |H|. (C, H) must be a proper crown, or an almost
/// crown whose H is not independent.
CrownStep apply_crown_delete(const Graph &g, int k, const VertexSet &c, const VertexSet &h, Journal &journal);

/// Merges C and H into one fresh vertex, k -= |H| - 1. (C, H) must be an
/// almost crown with H independent.
CrownStep apply_crown_merge(const Graph &g, int k, const VertexSet &c, const VertexSet &h, Journal &journal);

/// Folds a degree-2 vertex whose two neighbors are not adjacent.
CrownStep fold_degree2(const Graph &g, int k, VertexId v, Journal &journal);

/// Normalizes an input of maximum degree <= 4 to minimum degree 2.
std::pair<ReducedInstance, Journal> preprocess_input(const Graph &g, int k);

/// Lifts a cover of the reduced graph through `journal` (walked backwards).
VertexSet reconstruct_cover(const Journal &journal, VertexSet cover);

/// Applies `journal` to `g` in order; used to audit journals.
Graph replay_journal(Graph g, const Journal &journal);

}  // namespace vc4
