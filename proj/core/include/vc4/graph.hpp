#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vc4 {

/// Dense 0-based vertex identifier. Ids are never reused within one graph's
/// lifetime: merging allocates a fresh id above every id handed out before.
using VertexId = std::int32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Normalizes an arbitrary id list into a VertexSet (sorted, unique).
VertexSet make_set(std::vector<VertexId> ids);
VertexSet set_union(const VertexSet &a, const VertexSet &b);
VertexSet set_difference(const VertexSet &a, const VertexSet &b);
bool set_contains(const VertexSet &s, VertexId v);
bool is_subset(const VertexSet &sub, const VertexSet &super);

/// Simple undirected graph over stable vertex ids.
///
/// Copies are independent values; the solver hands each search branch its
/// own copy instead of keeping an undo log.
class Graph {
public:
    Graph() = default;

    /// `n` isolated vertices with ids 0..n-1.
    explicit Graph(std::size_t n);

    /// Builds a graph from 1-based external ids in [1, n]. Internal ids are
    /// the external ids minus one. Duplicate pairs collapse.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    void add_edge(VertexId u, VertexId v);

    bool contains(VertexId v) const noexcept;
    bool empty() const noexcept { return live_count_ == 0; }
    std::size_t num_vertices() const noexcept { return live_count_; }
    std::size_t num_edges() const noexcept;
    /// One past the largest id ever allocated (live or dead).
    std::size_t id_bound() const noexcept { return adj_.size(); }

    int degree(VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;

    VertexSet vertices() const;
    /// All edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    /// G - S. Throws GraphError if S names a dead or unknown vertex.
    Graph without(const VertexSet &s) const;
    void remove_vertices(const VertexSet &s);
    void remove_vertex(VertexId v);

    /// N(S): union of the neighborhoods of S, minus S.
    VertexSet neighborhood(const VertexSet &s) const;

    /// Replaces S by a fresh vertex adjacent to N(S). Returns the new id.
    VertexId merge(const VertexSet &s);
    std::pair<Graph, VertexId> merged(const VertexSet &s) const;

    /// Subgraph induced by S, keeping the same id space.
    Graph induced(const VertexSet &s) const;

    /// Empty graph has no extremal degree.
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;
    bool is_regular(int d) const;

    bool is_independent(const VertexSet &s) const;

    /// Components ordered by smallest member id.
    std::vector<VertexSet> connected_components() const;

    /// Throws GraphError when symmetry, simplicity or the live count is off.
    void validate() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    void require_live(VertexId v) const;
    void require_live(const VertexSet &s) const;

    std::vector<std::vector<VertexId>> adj_;  // sorted; empty for dead ids
    std::vector<std::uint8_t> alive_;
    std::size_t live_count_ = 0;
};

}  // namespace vc4
