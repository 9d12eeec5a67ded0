#pragma once

#include "vc4/graph.hpp"

// Independent ground truth for tests. Nothing here touches the solver's
// reduction or crown code.
namespace vc4::oracle {

struct OracleResult {
    int size = 0;
    VertexSet witness;
};

/// Exact minimum vertex cover by plain two-way branching on a maximum-degree
/// vertex (take it, or take its neighbors). Throws GraphError above 32 vertices.
OracleResult min_vc_exact(const Graph &g);

/// Minimum cover by enumerating subsets in order of size. At most 24 vertices.
int min_vc_by_subsets(const Graph &g);

/// True iff some subset of exactly `size` live vertices covers every edge.
/// At most 24 vertices.
bool has_cover_of_size(const Graph &g, int size);

bool is_vertex_cover(const Graph &g, const VertexSet &s);

/// Exhaustive maximum C-H matching size. Both sides at most 12.
int max_matching_brute(const Graph &g, const VertexSet &c, const VertexSet &h);

/// |N(S) within H| >= |S| + 1 for every nonempty S of C, by enumeration.
/// |C| at most 12.
bool surplus_brute(const Graph &g, const VertexSet &c, const VertexSet &h);

}  // namespace vc4::oracle
