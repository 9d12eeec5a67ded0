#include "vc4/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace vc4::oracle {
namespace {

using Mask = std::uint64_t;

struct Packed {
    std::vector<VertexId> ids;
    std::vector<Mask> adj;
};

Packed pack(const Graph &g, std::size_t limit) {
    if (g.num_vertices() > limit)
        throw GraphError("oracle limited to " + std::to_string(limit) + " vertices, got " +
                         std::to_string(g.num_vertices()));
    Packed p;
    p.ids = g.vertices();
    p.adj.assign(p.ids.size(), 0);
    auto index = [&](VertexId v) { return std::lower_bound(p.ids.begin(), p.ids.end(), v) - p.ids.begin(); };
    for (auto [u, v] : g.edges()) {
        auto a = index(u), b = index(v);
        p.adj[a] |= Mask{1} << b;
        p.adj[b] |= Mask{1} << a;
    }
    return p;
}

bool mask_covers(const Packed &p, Mask chosen) {
    for (std::size_t v = 0; v < p.adj.size(); ++v)
        if (!(chosen >> v & 1) && (p.adj[v] & ~chosen))
            return false;
    return true;
}

struct Search {
    const Packed &p;
    int best;
    Mask best_set;

    void run(Mask alive, Mask chosen, int count) {
        if (count >= best)
            return;
        int pick = -1, pick_deg = 0;
        for (std::size_t v = 0; v < p.adj.size(); ++v) {
            if (!(alive >> v & 1))
                continue;
            int d = std::popcount(p.adj[v] & alive);
            if (d > pick_deg) {
                pick_deg = d;
                pick = static_cast<int>(v);
            }
        }
        if (pick < 0) {
            best = count;
            best_set = chosen;
            return;
        }
        Mask bit = Mask{1} << pick;
        run(alive & ~bit, chosen | bit, count + 1);
        Mask nb = p.adj[pick] & alive;
        run(alive & ~nb & ~bit, chosen | nb, count + std::popcount(nb));
    }
};

}  // namespace

OracleResult min_vc_exact(const Graph &g) {
    Packed p = pack(g, 32);
    Mask all = p.ids.size() == 64 ? ~Mask{0} : (Mask{1} << p.ids.size()) - 1;
    Search s{p, static_cast<int>(p.ids.size()) + 1, all};
    s.run(all, 0, 0);
    OracleResult r{s.best, {}};
    for (std::size_t v = 0; v < p.ids.size(); ++v)
        if (s.best_set >> v & 1)
            r.witness.push_back(p.ids[v]);
    return r;
}

bool has_cover_of_size(const Graph &g, int size) {
    Packed p = pack(g, 24);
    int n = static_cast<int>(p.ids.size());
    if (size < 0 || size > n)
        return false;
    if (size == 0)
        return mask_covers(p, 0);
    // Gosper's hack over all masks with `size` bits.
    Mask m = (Mask{1} << size) - 1;
    const Mask limit = Mask{1} << n;
    while (m < limit) {
        if (mask_covers(p, m))
            return true;
        Mask c = m & -m;
        Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return false;
}

int min_vc_by_subsets(const Graph &g) {
    int n = static_cast<int>(g.num_vertices());
    for (int s = 0; s <= n; ++s)
        if (has_cover_of_size(g, s))
            return s;
    return n;
}

bool is_vertex_cover(const Graph &g, const VertexSet &s) {
    for (auto [u, v] : g.edges())
        if (!std::binary_search(s.begin(), s.end(), u) && !std::binary_search(s.begin(), s.end(), v))
            return false;
    return true;
}

int max_matching_brute(const Graph &g, const VertexSet &c, const VertexSet &h) {
    if (c.size() > 12 || h.size() > 12)
        throw GraphError("max_matching_brute limited to sides of 12");
    std::vector<std::vector<int>> adj(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j)
            if (g.adjacent(c[i], h[j]))
                adj[i].push_back(static_cast<int>(j));
    auto best = [&](auto &self, std::size_t i, unsigned used) -> int {
        if (i == c.size())
            return 0;
        int result = self(self, i + 1, used);
        for (int j : adj[i])
            if (!(used >> j & 1))
                result = std::max(result, 1 + self(self, i + 1, used | 1u << j));
        return result;
    };
    return best(best, 0, 0);
}

bool surplus_brute(const Graph &g, const VertexSet &c, const VertexSet &h) {
    (void)h;
    if (c.size() > 12)
        throw GraphError("surplus_brute limited to |C| <= 12");
    for (unsigned s = 1; s < (1u << c.size()); ++s) {
        std::vector<VertexId> members, nbrs;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (s >> i & 1)
                members.push_back(c[i]);
        for (VertexId v : members)
            for (VertexId u : g.neighbors(v))
                if (std::find(members.begin(), members.end(), u) == members.end())
                    nbrs.push_back(u);
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        if (nbrs.size() < members.size() + 1)
            return false;
    }
    return true;
}

}  // namespace vc4::oracle
