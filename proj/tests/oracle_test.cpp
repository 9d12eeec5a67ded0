#include <doctest.h>

#include <random>

#include "support/graphs.hpp"
#include "vc4/oracle.hpp"

using namespace vc4;
using namespace vc4::testing;
namespace oracle = vc4::oracle;

TEST_CASE("oracle minimum covers of named graphs") {
    CHECK(oracle::min_vc_exact(cycle(5)).size == 3);
    CHECK(oracle::min_vc_exact(complete(5)).size == 4);
    CHECK(oracle::min_vc_exact(complete(4)).size == 3);
    CHECK(oracle::min_vc_exact(petersen()).size == 6);
    // independent second route
    CHECK(oracle::min_vc_by_subsets(petersen()) == 6);
    CHECK(oracle::min_vc_exact(Graph()).size == 0);
}

TEST_CASE("oracle guards its size") {
    CHECK_THROWS_AS(oracle::min_vc_exact(cycle(33)), GraphError);
}

TEST_CASE("is_vertex_cover") {
    Graph c5 = cycle(5);
    CHECK(oracle::is_vertex_cover(c5, {0, 2, 3}));
    CHECK_FALSE(oracle::is_vertex_cover(c5, {0, 2}));
    CHECK(oracle::is_vertex_cover(c5, c5.vertices()));
}

TEST_CASE("brute matching and surplus") {
    // C={c}, H={h1,h2}: c adjacent to both.
    Graph star = Graph::from_edges(3, std::vector<Edge>{{1, 2}, {1, 3}});
    CHECK(oracle::max_matching_brute(star, {0}, {1, 2}) == 1);
    CHECK(oracle::surplus_brute(star, {0}, {1, 2}));
    // C={c1,c2}, H={h}: both adjacent to h.
    Graph two = Graph::from_edges(3, std::vector<Edge>{{1, 3}, {2, 3}});
    CHECK(oracle::max_matching_brute(two, {0, 1}, {2}) == 1);
    CHECK_FALSE(oracle::surplus_brute(two, {0, 1}, {2}));
}

TEST_CASE("oracle witness is a cover and nothing smaller exists") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 16)(rng);
        Graph g = random_graph(n, 0.35, 4, rng);
        auto r = oracle::min_vc_exact(g);
        CHECK(static_cast<int>(r.witness.size()) == r.size);
        CHECK(oracle::is_vertex_cover(g, r.witness));
        if (r.size > 0)
            CHECK_FALSE(oracle::has_cover_of_size(g, r.size - 1));
    }
}
