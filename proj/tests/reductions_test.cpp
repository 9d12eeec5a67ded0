#include <doctest.h>

#include <random>

#include "support/graphs.hpp"
#include "vc4/crown.hpp"
#include "vc4/oracle.hpp"
#include "vc4/reductions.hpp"

using namespace vc4;
using namespace vc4::testing;

namespace {

int minvc(const Graph &g) { return oracle::min_vc_exact(g).size; }

// Lifts an optimal cover of `reduced` through `journal` and checks it covers `g`.
void check_lift(const Graph &g, const Graph &reduced, const Journal &journal) {
    VertexSet lifted = reconstruct_cover(journal, oracle::min_vc_exact(reduced).witness);
    CHECK(oracle::is_vertex_cover(g, lifted));
}

Graph seven_tree() {
    return Graph::from_edges(7, std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
}

}  // namespace

TEST_CASE("exhaust_low_degree examples") {
    SUBCASE("path a-b-c-d-e") {
        auto [r, journal] = exhaust_low_degree(path(5), 2, {});
        CHECK(r.graph.empty());
        CHECK(r.k == 0);
        CHECK(r.h_removed == VertexSet{1, 3});
        CHECK(r.c_removed == VertexSet{0, 2, 4});
        CHECK(reconstruct_cover(journal, {}) == VertexSet{1, 3});
    }
    SUBCASE("star K1,3") {
        auto [r, journal] = exhaust_low_degree(complete_bipartite(1, 3), 1, {});
        CHECK(r.graph.empty());
        CHECK(r.k == 0);
        CHECK(r.h_removed == VertexSet{0});
        CHECK(r.c_removed == VertexSet{1, 2, 3});
    }
    SUBCASE("5-cycle with seed {1}") {
        auto [r, journal] = exhaust_low_degree(cycle(5), 3, {0});
        CHECK(r.graph.empty());
        CHECK(r.k == 0);
        CHECK(r.h_removed == VertexSet{0, 2, 4});
        CHECK(r.c_removed == VertexSet{1, 3});
    }
    SUBCASE("7-vertex tree vanishes") {
        auto [r, journal] = exhaust_low_degree(seven_tree(), 3, {});
        CHECK(r.graph.empty());
        CHECK(r.k == 1);
        CHECK(r.h_removed == VertexSet{1, 2});
        CHECK(r.c_removed == VertexSet{0, 3, 4, 5, 6});
    }
    SUBCASE("min degree 2 is left alone") {
        auto [r, journal] = exhaust_low_degree(complete(5), 4, {});
        CHECK(r.graph == complete(5));
        CHECK(journal.empty());
    }
}

TEST_CASE("crown deletion examples") {
    Journal j;
    Graph k23 = complete_bipartite(2, 3);
    auto step = apply_crown_delete(k23, 2, {2, 3, 4}, {0, 1}, j);
    CHECK(step.graph.empty());
    CHECK(step.k == 0);

    Journal j2;
    Graph host = disjoint_union(k23, complete(3));
    auto step2 = apply_crown_delete(host, 4, {2, 3, 4}, {0, 1}, j2);
    CHECK(step2.graph.vertices() == VertexSet{5, 6, 7});
    CHECK(step2.graph.num_edges() == 3);
    CHECK(step2.k == 2);

    Journal j3;
    CHECK_THROWS_AS(apply_crown_delete(cycle(5), 3, {0}, {1, 4}, j3), ReductionError);
}

TEST_CASE("crown merge examples") {
    Journal j;
    auto s4 = apply_crown_merge(cycle(4), 2, {0}, {1, 3}, j);
    CHECK(s4.k == 1);
    CHECK(s4.graph.vertices() == VertexSet{2, s4.vstar});
    CHECK(s4.graph.adjacent(2, s4.vstar));

    Journal j5;
    auto s5 = apply_crown_merge(cycle(5), 3, {0}, {1, 4}, j5);
    CHECK(s5.k == 2);
    CHECK(s5.graph.vertices() == VertexSet{2, 3, s5.vstar});
    CHECK(s5.graph.num_edges() == 3);

    Journal jt;
    Graph tri_plus = Graph::from_edges(3, std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(apply_crown_merge(tri_plus, 2, {0}, {1, 2}, jt), ReductionError);
}

TEST_CASE("degree-2 fold examples") {
    Journal j4;
    auto s4 = fold_degree2(cycle(4), 2, 0, j4);
    CHECK(s4.graph.num_vertices() == 2);
    CHECK(s4.graph.num_edges() == 1);
    CHECK(s4.k == 1);

    Journal j5;
    Graph c5 = cycle(5);
    auto s5 = fold_degree2(c5, 3, 0, j5);
    CHECK(s5.graph.num_vertices() == 3);
    CHECK(s5.graph.num_edges() == 3);
    CHECK(s5.k == 2);
    CHECK(3 * 3 - 5 == 4);
    CHECK(3 * s5.k - static_cast<int>(s5.graph.num_vertices()) == 3);

    Journal jt;
    CHECK_THROWS_AS(fold_degree2(complete(3), 2, 0, jt), ReductionError);
}

TEST_CASE("C4 fold unfolds to a size-2 cover either way") {
    Graph c4 = cycle(4);
    Journal j;
    auto step = fold_degree2(c4, 2, 0, j);
    for (VertexSet leaf : {VertexSet{step.vstar}, VertexSet{2}}) {
        VertexSet cover = reconstruct_cover(j, leaf);
        CHECK(cover.size() == 2);
        CHECK(oracle::is_vertex_cover(c4, cover));
    }
}

TEST_CASE("preprocess_input examples") {
    auto [tree, jt] = preprocess_input(seven_tree(), 3);
    CHECK(tree.graph.empty());
    CHECK(tree.k == 1);

    auto [k5, jk] = preprocess_input(complete(5), 4);
    CHECK(k5.graph == complete(5));
    CHECK(k5.k == 4);

    CHECK_THROWS_AS(preprocess_input(complete(6), 5), GraphError);
}

TEST_CASE("low-degree exhaustion is exact and replayable") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 16)(rng);
        Graph g = random_graph(n, 0.25, 4, rng);
        auto [r, journal] = exhaust_low_degree(g, n, {});
        CHECK(minvc(g) == minvc(r.graph) + static_cast<int>(r.h_removed.size()));
        if (!r.graph.empty())
            CHECK(*r.graph.min_degree() >= 2);
        CHECK(replay_journal(g, journal) == r.graph);
        check_lift(g, r.graph, journal);
    }
}

TEST_CASE("crown rules and folding preserve minvc on random hosts") {
    std::mt19937_64 rng(22);
    int c1 = 0, c2 = 0, c3 = 0, folds = 0;
    for (int trial = 0; trial < 250; ++trial) {
        auto inst = random_crown_instance(rng);
        const Graph &g = inst.graph;
        int whole = minvc(g);
        int n = static_cast<int>(g.num_vertices());
        Crown cr = resolve_crown(g, inst.c, inst.h);
        Journal j;
        CrownStep step;
        int paid = 0;
        if (cr.kind == CrownKind::Proper) {
            step = apply_crown_delete(g, n, cr.c, cr.h, j);
            paid = static_cast<int>(cr.h.size());
            ++c1;
        } else if (!g.is_independent(cr.h)) {
            step = apply_crown_delete(g, n, cr.c, cr.h, j);
            paid = static_cast<int>(cr.h.size());
            ++c2;
        } else {
            step = apply_crown_merge(g, n, cr.c, cr.h, j);
            paid = static_cast<int>(cr.h.size()) - 1;
            ++c3;
        }
        CHECK(step.k == n - paid);
        CHECK(whole == minvc(step.graph) + paid);
        CHECK(replay_journal(g, j) == step.graph);
        check_lift(g, step.graph, j);

        for (VertexId v : g.vertices()) {
            auto nb = g.neighbors(v);
            if (nb.size() == 2 && !g.adjacent(nb[0], nb[1])) {
                Journal jf;
                auto f = fold_degree2(g, n, v, jf);
                CHECK(whole == minvc(f.graph) + 1);
                check_lift(g, f.graph, jf);
                ++folds;
                break;
            }
        }
    }
    CHECK(c1 > 0);
    CHECK(c2 + c3 > 0);
    CHECK(folds > 0);
}
