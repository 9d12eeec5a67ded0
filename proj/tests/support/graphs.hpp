#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "vc4/graph.hpp"

namespace vc4::testing {

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i)
        e.emplace_back(i, i % n + 1);
    return Graph::from_edges(n, e);
}

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

/// K_{a,b}: ids 0..a-1 on one side, a..a+b-1 on the other.
inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(a + b, e);
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i + 1, (i + 1) % 5 + 1);          // outer cycle
        e.emplace_back(i + 6, (i + 2) % 5 + 6);          // inner pentagram
        e.emplace_back(i + 1, i + 6);                    // spokes
    }
    return Graph::from_edges(10, e);
}

inline Graph disjoint_union(const Graph &a, const Graph &b) {
    std::vector<Edge> e;
    auto na = static_cast<VertexId>(a.id_bound());
    for (auto [u, v] : a.edges())
        e.emplace_back(u + 1, v + 1);
    for (auto [u, v] : b.edges())
        e.emplace_back(u + na + 1, v + na + 1);
    return Graph::from_edges(a.id_bound() + b.id_bound(), e);
}

/// Random graph on n vertices; each pair kept with probability p, degrees
/// capped at max_deg.
inline Graph random_graph(int n, double p, int max_deg, std::mt19937_64 &rng) {
    std::bernoulli_distribution keep(p);
    Graph g(static_cast<std::size_t>(n));
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (keep(rng) && g.degree(u) < max_deg && g.degree(v) < max_deg)
                g.add_edge(u, v);
    return g;
}

struct CrownInstance {
    Graph graph;
    VertexSet c;
    VertexSet h;
};

/// Host graph (<= 20 vertices, min degree >= 2, max degree <= 4) with an
/// embedded general crown (C, H), |C| >= |H| - 1. C vertices get 2..4
/// neighbors in H only; the rest of the graph is a cycle with chords, and H
/// is wired to the rest (and sometimes to itself).
inline CrownInstance random_crown_instance(std::mt19937_64 &rng) {
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (;;) {
        int hsize = uni(2, 4);
        int csize = uni(std::max(1, hsize - 1), hsize + 2);
        int rsize = uni(3, 20 - hsize - csize);
        if (rsize < 3)
            continue;
        int n = csize + hsize + rsize;
        Graph g(static_cast<std::size_t>(n));
        VertexSet c, h, r;
        for (int i = 0; i < csize; ++i)
            c.push_back(i);
        for (int i = 0; i < hsize; ++i)
            h.push_back(csize + i);
        for (int i = 0; i < rsize; ++i)
            r.push_back(csize + hsize + i);

        auto room = [&](VertexId v) { return g.degree(v) < 4; };
        bool failed = false;
        for (VertexId x : c) {
            int want = uni(2, std::min(4, hsize));
            std::vector<VertexId> order(h.begin(), h.end());
            std::shuffle(order.begin(), order.end(), rng);
            int got = 0;
            for (VertexId y : order)
                if (got < want && room(y)) {
                    g.add_edge(x, y);
                    ++got;
                }
            failed |= got < 2;
        }
        if (failed)
            continue;
        for (int i = 0; i < rsize; ++i)
            g.add_edge(r[i], r[(i + 1) % rsize]);
        for (int i = 0; i < rsize; ++i) {
            VertexId a = r[uni(0, rsize - 1)], b = r[uni(0, rsize - 1)];
            if (a != b && room(a) && room(b) && !g.adjacent(a, b))
                g.add_edge(a, b);
        }
        for (VertexId y : h) {
            int extra = uni(0, 2);
            for (int t = 0; t < extra; ++t) {
                VertexId z = r[uni(0, rsize - 1)];
                if (room(y) && room(z) && !g.adjacent(y, z))
                    g.add_edge(y, z);
            }
            if (uni(0, 3) == 0) {
                VertexId y2 = h[uni(0, hsize - 1)];
                if (y2 != y && room(y) && room(y2) && !g.adjacent(y, y2))
                    g.add_edge(y, y2);
            }
        }
        if (*g.min_degree() < 2)
            continue;
        return {std::move(g), c, h};
    }
}

}  // namespace vc4::testing
