#include <random>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "socloud/graph.hpp"
#include "socloud/sweep.hpp"

using socloud::add_link;
using socloud::all_pairs_distances;
using socloud::complete_graph;
using socloud::DistanceMatrix;
using socloud::Edge;
using socloud::Graph;
using socloud::make_graph;
using socloud::oracle_distances;
using socloud::path_graph;
using socloud::random_graph;
using socloud::ring_graph;

TEST_CASE("graph construction validates and normalizes input") {
    const Graph g = make_graph(4, {{2, 0}, {0, 1}, {1, 0}, {2, 3}});
    REQUIRE(g.node_count() == 4);
    REQUIRE(g.edge_count() == 3);
    REQUIRE(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
    REQUIRE(g.has_edge(0, 2));
    REQUIRE(g.has_edge(2, 0));
    REQUIRE_FALSE(g.has_edge(1, 3));
    REQUIRE(g.degree(0) == 2);
    REQUIRE(g.degree(3) == 1);
    REQUIRE(g.neighbors(2) == std::vector<socloud::NodeId>{0, 3});

    REQUIRE_THROWS_AS(make_graph(0, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(3, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("generators produce the expected shapes") {
    REQUIRE(ring_graph(5).edge_count() == 5);
    REQUIRE(ring_graph(3) == complete_graph(3));
    REQUIRE_THROWS_AS(ring_graph(2), std::invalid_argument);

    REQUIRE(path_graph(1).edge_count() == 0);
    REQUIRE(path_graph(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

    REQUIRE(complete_graph(5).edge_count() == 10);
    for (int u = 0; u < 5; ++u) {
        REQUIRE(complete_graph(5).degree(u) == 4);
    }
}

TEST_CASE("random graphs are seed deterministic and respect edge probability bounds") {
    std::mt19937_64 a(7);
    std::mt19937_64 b(7);
    REQUIRE(random_graph(10, 0.4, a) == random_graph(10, 0.4, b));

    std::mt19937_64 rng(1);
    REQUIRE(random_graph(8, 0.0, rng).edge_count() == 0);
    REQUIRE(random_graph(8, 1.0, rng) == complete_graph(8));
    REQUIRE_THROWS_AS(random_graph(8, 1.5, rng), std::invalid_argument);
}

TEST_CASE("add_link appends exactly one new edge") {
    const Graph ring = ring_graph(6);
    const Graph extended = add_link(ring, 0, 2);
    REQUIRE(extended.edge_count() == ring.edge_count() + 1);
    REQUIRE(extended.has_edge(0, 2));
    REQUIRE_FALSE(ring.has_edge(0, 2));

    REQUIRE_THROWS_AS(add_link(ring, 2, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(add_link(ring, 0, 6), std::invalid_argument);
    REQUIRE_THROWS_AS(add_link(ring, 0, 1), std::invalid_argument);
}

TEST_CASE("shortest path distances on known topologies") {
    const DistanceMatrix path = all_pairs_distances(path_graph(5));
    REQUIRE(path.at(0, 4) == 4);
    REQUIRE(path.at(1, 3) == 2);
    REQUIRE(path.at(2, 2) == 0);

    const int n = 9;
    const DistanceMatrix ring = all_pairs_distances(ring_graph(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            REQUIRE(ring.at(i, j) == socloud::ring_distance(n, i, j));
        }
    }
}

TEST_CASE("unreachable pairs are flagged, not silently zero") {
    const Graph split = make_graph(4, {{0, 1}, {2, 3}});
    const DistanceMatrix dist = all_pairs_distances(split);
    REQUIRE(dist.at(0, 1) == 1);
    REQUIRE(dist.at(0, 2) == DistanceMatrix::kUnreachable);
    REQUIRE_FALSE(dist.reachable(1, 3));
    REQUIRE(dist.reachable(2, 3));
}

TEST_CASE("breadth-first distances agree with the relaxation reference") {
    for (int n = 3; n <= 10; ++n) {
        REQUIRE(all_pairs_distances(ring_graph(n)) == oracle_distances(ring_graph(n)));
        REQUIRE(all_pairs_distances(path_graph(n)) == oracle_distances(path_graph(n)));
    }
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(4 + trial % 9, 0.3, rng);
        REQUIRE(all_pairs_distances(g) == oracle_distances(g));
    }
}
