#include "vc4/graph.hpp"

#include <algorithm>
#include <string>

namespace vc4 {

VertexSet make_set(std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

VertexSet set_union(const VertexSet &a, const VertexSet &b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet &a, const VertexSet &b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet &s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const VertexSet &sub, const VertexSet &super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Graph::Graph(std::size_t n) : adj_(n), alive_(n, 1), live_count_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
            throw GraphError("vertex id out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw GraphError("self-loop on vertex " + std::to_string(u));
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

void Graph::add_edge(VertexId u, VertexId v) {
    require_live(u);
    require_live(v);
    if (u == v)
        throw GraphError("self-loop on vertex " + std::to_string(u));
    auto insert = [](std::vector<VertexId> &list, VertexId x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x)
            list.insert(it, x);
    };
    insert(adj_[u], v);
    insert(adj_[v], u);
}

bool Graph::contains(VertexId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < alive_.size() && alive_[v];
}

std::size_t Graph::num_edges() const noexcept {
    std::size_t total = 0;
    for (const auto &list : adj_)
        total += list.size();
    return total / 2;
}

void Graph::require_live(VertexId v) const {
    if (!contains(v))
        throw GraphError("unknown or deleted vertex " + std::to_string(v));
}

void Graph::require_live(const VertexSet &s) const {
    for (VertexId v : s)
        require_live(v);
}

int Graph::degree(VertexId v) const {
    require_live(v);
    return static_cast<int>(adj_[v].size());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    require_live(v);
    return adj_[v];
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    require_live(u);
    require_live(v);
    const auto &a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    return std::binary_search(a.begin(), a.end(), &a == &adj_[u] ? v : u);
}

VertexSet Graph::vertices() const {
    VertexSet out;
    out.reserve(live_count_);
    for (std::size_t v = 0; v < alive_.size(); ++v)
        if (alive_[v])
            out.push_back(static_cast<VertexId>(v));
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (VertexId v : adj_[u])
            if (static_cast<VertexId>(u) < v)
                out.emplace_back(static_cast<VertexId>(u), v);
    return out;
}

void Graph::remove_vertex(VertexId v) {
    require_live(v);
    for (VertexId u : adj_[v]) {
        auto &list = adj_[u];
        list.erase(std::lower_bound(list.begin(), list.end(), v));
    }
    adj_[v].clear();
    alive_[v] = 0;
    --live_count_;
}

void Graph::remove_vertices(const VertexSet &s) {
    require_live(s);
    for (VertexId v : s)
        remove_vertex(v);
}

Graph Graph::without(const VertexSet &s) const {
    Graph g = *this;
    g.remove_vertices(s);
    return g;
}

VertexSet Graph::neighborhood(const VertexSet &s) const {
    require_live(s);
    std::vector<VertexId> out;
    for (VertexId v : s)
        for (VertexId u : adj_[v])
            if (!set_contains(s, u))
                out.push_back(u);
    return make_set(std::move(out));
}

VertexId Graph::merge(const VertexSet &s) {
    if (s.empty())
        throw GraphError("merge of an empty set");
    VertexSet outside = neighborhood(s);
    remove_vertices(s);
    auto fresh = static_cast<VertexId>(adj_.size());
    adj_.emplace_back();
    alive_.push_back(1);
    ++live_count_;
    for (VertexId u : outside)
        add_edge(fresh, u);
    return fresh;
}

std::pair<Graph, VertexId> Graph::merged(const VertexSet &s) const {
    Graph g = *this;
    VertexId v = g.merge(s);
    return {std::move(g), v};
}

Graph Graph::induced(const VertexSet &s) const {
    require_live(s);
    Graph g;
    g.adj_.resize(adj_.size());
    g.alive_.assign(alive_.size(), 0);
    for (VertexId v : s) {
        g.alive_[v] = 1;
        for (VertexId u : adj_[v])
            if (set_contains(s, u))
                g.adj_[v].push_back(u);
    }
    g.live_count_ = s.size();
    return g;
}

std::optional<int> Graph::min_degree() const {
    if (empty())
        return std::nullopt;
    int best = -1;
    for (std::size_t v = 0; v < adj_.size(); ++v)
        if (alive_[v] && (best < 0 || static_cast<int>(adj_[v].size()) < best))
            best = static_cast<int>(adj_[v].size());
    return best;
}

std::optional<int> Graph::max_degree() const {
    if (empty())
        return std::nullopt;
    int best = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v)
        if (alive_[v])
            best = std::max(best, static_cast<int>(adj_[v].size()));
    return best;
}

bool Graph::is_regular(int d) const {
    for (std::size_t v = 0; v < adj_.size(); ++v)
        if (alive_[v] && static_cast<int>(adj_[v].size()) != d)
            return false;
    return true;
}

bool Graph::is_independent(const VertexSet &s) const {
    require_live(s);
    for (VertexId v : s)
        for (VertexId u : adj_[v])
            if (set_contains(s, u))
                return false;
    return true;
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> out;
    std::vector<std::uint8_t> seen(adj_.size(), 0);
    std::vector<VertexId> stack;
    for (std::size_t start = 0; start < adj_.size(); ++start) {
        if (!alive_[start] || seen[start])
            continue;
        VertexSet comp;
        stack.push_back(static_cast<VertexId>(start));
        seen[start] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId u : adj_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

void Graph::validate() const {
    if (adj_.size() != alive_.size())
        throw GraphError("adjacency and liveness tables disagree in size");
    std::size_t live = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        const auto &list = adj_[v];
        if (!alive_[v]) {
            if (!list.empty())
                throw GraphError("dead vertex " + std::to_string(v) + " keeps neighbors");
            continue;
        }
        ++live;
        for (std::size_t i = 0; i < list.size(); ++i) {
            VertexId u = list[i];
            if (i > 0 && list[i - 1] >= u)
                throw GraphError("adjacency of " + std::to_string(v) + " unsorted or duplicated");
            if (u == static_cast<VertexId>(v))
                throw GraphError("self-loop on " + std::to_string(v));
            if (!contains(u))
                throw GraphError("edge to dead vertex " + std::to_string(u));
            const auto &back = adj_[u];
            if (!std::binary_search(back.begin(), back.end(), static_cast<VertexId>(v)))
                throw GraphError("asymmetric edge " + std::to_string(v) + "-" + std::to_string(u));
        }
    }
    if (live != live_count_)
        throw GraphError("live vertex count out of sync");
}

}  // namespace vc4
