#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "vc4/graph.hpp"

namespace vc4 {

/// Raised when a crown fails its own validators. Indicates a solver bug.
class CrownError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Pairs (c, h) with c taken from the crown's C side and h from its H side.
struct Matching {
    std::vector<std::pair<VertexId, VertexId>> pairs;

    std::size_t size() const noexcept { return pairs.size(); }
};

/// Maximum-cardinality matching over C-H edges of `g` (augmenting paths).
/// Throws CrownError if C and H overlap.
Matching max_bipartite_matching(const Graph &g, const VertexSet &c, const VertexSet &h);

/// C, H disjoint and nonempty, and every neighbor of C lies in H.
bool check_general_crown(const Graph &g, const VertexSet &c, const VertexSet &h);

/// G - C - H is empty or has minimum degree at least 2.
bool check_good(const Graph &g, const VertexSet &c, const VertexSet &h);

/// General crown with a matching saturating H.
bool check_proper_crown(const Graph &g, const VertexSet &c, const VertexSet &h);

/// General crown with |H| = |C| + 1 and |N(S)| >= |S| + 1 for all nonempty S of C.
///
/// The surplus condition is tested by duplicating one C vertex at a time and
/// asking for a matching that saturates C plus the duplicate.
bool check_almost_crown(const Graph &g, const VertexSet &c, const VertexSet &h);

enum class CrownKind { Proper, Almost };

struct Crown {
    VertexSet c;
    VertexSet h;
    CrownKind kind = CrownKind::Proper;
    /// Proper: saturates h. Almost: saturates c.
    Matching certificate;
    /// True when closing the crown under degree-0/degree-1 deletions pulled in
    /// vertices outside the (C, H) pair that was passed in.
    bool extended = false;
};

/// Turns a general crown with |C| >= |H| - 1 into either a good proper crown
/// or a certificate that the input pair is an almost crown.
///
/// A proper answer is built from a minimum-surplus subset S of C (so N(S) can
/// be matched into S), then closed under degree-0/degree-1 deletion of the
/// remainder so that what is left has minimum degree 2. Every answer is
/// re-validated before it is returned.
Crown resolve_crown(const Graph &g, const VertexSet &c, const VertexSet &h);

}  // namespace vc4
