#include <doctest.h>

#include <random>

#include "support/graphs.hpp"
#include "vc4/graph.hpp"

using namespace vc4;
using namespace vc4::testing;

TEST_CASE("from_edges builds simple graphs with 0-based ids") {
    Graph p3 = Graph::from_edges(3, std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(p3.num_vertices() == 3);
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(2) == 1);

    Graph c5 = cycle(5);
    for (VertexId v : c5.vertices())
        CHECK(c5.degree(v) == 2);

    Graph dup = Graph::from_edges(2, std::vector<Edge>{{1, 2}, {2, 1}});
    CHECK(dup.num_edges() == 1);
}

TEST_CASE("from_edges rejects self-loops and out-of-range ids") {
    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{2, 2}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{1, 4}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 1}}), GraphError);
}

TEST_CASE("without removes vertices and leaves the input untouched") {
    Graph k4 = complete(4);
    Graph k3 = k4.without({0});
    CHECK(k3.num_vertices() == 3);
    CHECK(k3.num_edges() == 3);
    CHECK(k3.is_regular(2));
    CHECK(k4.num_vertices() == 4);

    Graph p = cycle(5).without({0});
    CHECK(p.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});

    CHECK(k4.without({}) == k4);
    CHECK_THROWS_AS(k3.without({0}), GraphError);
    CHECK_THROWS_AS(k3.without({17}), GraphError);
}

TEST_CASE("neighborhood of a set excludes the set") {
    Graph c5 = cycle(5);
    CHECK(c5.neighborhood({0}) == VertexSet{1, 4});
    CHECK(c5.neighborhood({0, 1}) == VertexSet{2, 4});
    CHECK(complete(4).neighborhood({0, 1, 2, 3}).empty());
    CHECK_THROWS_AS(c5.neighborhood({9}), GraphError);
}

TEST_CASE("merge contracts a set into a fresh vertex") {
    SUBCASE("4-cycle a-b-c-d, S={a,b,d}") {
        Graph c4 = cycle(4);
        auto [g, vstar] = c4.merged({0, 1, 3});
        CHECK(vstar == 4);
        CHECK(g.vertices() == VertexSet{2, 4});
        CHECK(g.edges() == std::vector<Edge>{{2, 4}});
    }
    SUBCASE("path a-b-c, S={a,c}") {
        auto [g, vstar] = path(3).merged({0, 2});
        CHECK(g.edges() == std::vector<Edge>{{1, vstar}});
    }
    SUBCASE("5-cycle, S={1,2,5} gives triangle {v*,3,4}") {
        auto [g, vstar] = cycle(5).merged({0, 1, 4});
        CHECK(g.vertices() == VertexSet{2, 3, vstar});
        CHECK(g.edges() == std::vector<Edge>{{2, 3}, {2, vstar}, {3, vstar}});
    }
    CHECK_THROWS_AS(cycle(4).merged({}), GraphError);
    CHECK_THROWS_AS(cycle(4).merged({7}), GraphError);
}

TEST_CASE("extremal degrees and regularity") {
    Graph k5 = complete(5);
    CHECK(k5.min_degree() == 4);
    CHECK(k5.max_degree() == 4);
    CHECK(k5.is_regular(4));
    CHECK(path(3).min_degree() == 1);
    CHECK(path(3).max_degree() == 2);
    CHECK_FALSE(Graph().min_degree().has_value());
    CHECK_FALSE(Graph().max_degree().has_value());
}

TEST_CASE("connected components are ordered by smallest id") {
    Graph two = disjoint_union(complete(3), complete(3));
    auto comps = two.connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3, 4, 5});

    CHECK(petersen().connected_components().size() == 1);
    CHECK(Graph(7).connected_components().size() == 7);
    CHECK(Graph().connected_components().empty());
}

TEST_CASE("random delete/merge sequences keep the graph valid") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(14, 0.3, 4, rng);
        for (int step = 0; step < 6 && g.num_vertices() > 2; ++step) {
            VertexSet live = g.vertices();
            std::shuffle(live.begin(), live.end(), rng);
            int take = std::uniform_int_distribution<int>(1, 3)(rng);
            VertexSet s = make_set({live.begin(), live.begin() + std::min<std::size_t>(take, live.size())});
            std::size_t n_before = g.num_vertices();
            if (step % 2 == 0) {
                g.remove_vertices(s);
                CHECK(g.num_vertices() == n_before - s.size());
            } else {
                auto outside = g.neighborhood(s);
                VertexId v = g.merge(s);
                CHECK(g.num_vertices() == n_before - s.size() + 1);
                CHECK(g.degree(v) == static_cast<int>(outside.size()));
            }
            CHECK_NOTHROW(g.validate());
        }
        // Components partition the live vertices with no crossing edges.
        auto comps = g.connected_components();
        std::vector<int> owner(g.id_bound(), -1);
        std::size_t total = 0;
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (VertexId v : comps[i]) {
                CHECK(owner[v] == -1);
                owner[v] = static_cast<int>(i);
                ++total;
            }
        CHECK(total == g.num_vertices());
        for (auto [u, v] : g.edges())
            CHECK(owner[u] == owner[v]);
    }
}
