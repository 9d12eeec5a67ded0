#include "vc4/reductions.hpp"

#include <set>
#include <string>

#include "vc4/crown.hpp"

namespace vc4 {

std::pair<ReducedInstance, Journal> exhaust_low_degree(const Graph &g, int k, const VertexSet &seed) {
    ReducedInstance out{g, k, {}, {}};
    Journal journal;
    if (!seed.empty()) {
        out.graph.remove_vertices(seed);
        out.k -= static_cast<int>(seed.size());
        out.h_removed = seed;
        journal.push_back(BranchPick{seed});
    }

    std::set<VertexId> deg0, deg1;
    auto classify = [&](VertexId v) {
        deg0.erase(v);
        deg1.erase(v);
        if (!out.graph.contains(v))
            return;
        int d = out.graph.degree(v);
        if (d == 0)
            deg0.insert(v);
        else if (d == 1)
            deg1.insert(v);
    };
    for (VertexId v : out.graph.vertices())
        classify(v);

    std::vector<VertexId> c_removed, h_removed;
    while (!deg0.empty() || !deg1.empty()) {
        if (!deg0.empty()) {
            VertexId v = *deg0.begin();
            deg0.erase(deg0.begin());
            out.graph.remove_vertex(v);
            c_removed.push_back(v);
            journal.push_back(Discard{{v}});
            continue;
        }
        VertexId v = *deg1.begin();
        VertexId u = out.graph.neighbors(v)[0];
        std::vector<VertexId> touched(out.graph.neighbors(u).begin(), out.graph.neighbors(u).end());
        out.graph.remove_vertex(u);
        out.k -= 1;
        h_removed.push_back(u);
        journal.push_back(CoverDelete{{u}});
        classify(u);
        for (VertexId w : touched)
            classify(w);
    }
    out.c_removed = make_set(std::move(c_removed));
    out.h_removed = set_union(out.h_removed, make_set(std::move(h_removed)));
    return {std::move(out), std::move(journal)};
}

CrownStep apply_crown_delete(const Graph &g, int k, const VertexSet &c, const VertexSet &h, Journal &journal) {
    bool proper = check_proper_crown(g, c, h);
    bool almost_dependent = !proper && check_almost_crown(g, c, h) && !g.is_independent(h);
    if (!proper && !almost_dependent)
        throw ReductionError("crown deletion requires a proper crown or an almost crown with dependent H");
    CrownStep step{g.without(set_union(c, h)), k - static_cast<int>(h.size()), -1};
    journal.push_back(CoverDelete{h});
    journal.push_back(Discard{c});
    return step;
}

CrownStep apply_crown_merge(const Graph &g, int k, const VertexSet &c, const VertexSet &h, Journal &journal) {
    if (!check_almost_crown(g, c, h))
        throw ReductionError("crown merge requires an almost crown");
    if (!g.is_independent(h))
        throw ReductionError("crown merge requires an independent H");
    auto [merged, vstar] = g.merged(set_union(c, h));
    journal.push_back(MergeFold{vstar, c, h});
    return CrownStep{std::move(merged), k - (static_cast<int>(h.size()) - 1), vstar};
}

CrownStep fold_degree2(const Graph &g, int k, VertexId v, Journal &journal) {
    if (g.degree(v) != 2)
        throw ReductionError("fold requires a degree-2 vertex, got degree " + std::to_string(g.degree(v)));
    auto nb = g.neighbors(v);
    if (g.adjacent(nb[0], nb[1]))
        throw ReductionError("fold forbidden: neighbors of " + std::to_string(v) + " are adjacent");
    return apply_crown_merge(g, k, {v}, VertexSet(nb.begin(), nb.end()), journal);
}

std::pair<ReducedInstance, Journal> preprocess_input(const Graph &g, int k) {
    if (auto d = g.max_degree(); d && *d > 4)
        throw GraphError("maximum degree " + std::to_string(*d) + " exceeds 4");
    return exhaust_low_degree(g, k, {});
}

VertexSet reconstruct_cover(const Journal &journal, VertexSet cover) {
    for (auto it = journal.rbegin(); it != journal.rend(); ++it) {
        std::visit(
            [&](const auto &ev) {
                using T = std::decay_t<decltype(ev)>;
                if constexpr (std::is_same_v<T, BranchPick>) {
                    cover = set_union(cover, ev.s);
                } else if constexpr (std::is_same_v<T, CoverDelete>) {
                    cover = set_union(cover, ev.h);
                } else if constexpr (std::is_same_v<T, MergeFold>) {
                    if (set_contains(cover, ev.vstar))
                        cover = set_union(set_difference(cover, {ev.vstar}), ev.h);
                    else
                        cover = set_union(cover, ev.c);
                }
            },
            *it);
    }
    return cover;
}

Graph replay_journal(Graph g, const Journal &journal) {
    for (const auto &event : journal) {
        std::visit(
            [&](const auto &ev) {
                using T = std::decay_t<decltype(ev)>;
                if constexpr (std::is_same_v<T, BranchPick>) {
                    g.remove_vertices(ev.s);
                } else if constexpr (std::is_same_v<T, CoverDelete>) {
                    g.remove_vertices(ev.h);
                } else if constexpr (std::is_same_v<T, Discard>) {
                    g.remove_vertices(ev.c);
                } else {
                    VertexId v = g.merge(set_union(ev.c, ev.h));
                    if (v != ev.vstar)
                        throw ReductionError("journal replay produced a different merge id");
                }
            },
            event);
    }
    return g;
}

}  // namespace vc4
