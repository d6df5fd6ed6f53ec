#include <doctest.h>

#include "orient/graph.hpp"
#include "orient/random_gen.hpp"
#include "support/brute.hpp"

using namespace orient;
using namespace orient::testsupport;

TEST_SUITE("graph_core") {

TEST_CASE("parse single edge") {
    Graph g = parse_graph("p 2 1\ne 0 1\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("parse triangle with comments and labels") {
    Graph g = parse_graph("c hello\np 3 3\ne 0 1\ne 1 2\ne 0 2\nl 0 root\n");
    CHECK(g.edge_count() == 3);
    CHECK(g.labels().at(0) == "root");
    CHECK(g.vertex_by_label("root") == 0);
}

TEST_CASE("parse rejects duplicates, loops, bad counts") {
    CHECK_THROWS_AS(parse_graph("p 2 2\ne 0 1\ne 1 0\n"), validation_error);
    CHECK_THROWS_AS(parse_graph("p 2 1\ne 1 1\n"), validation_error);
    CHECK_THROWS_AS(parse_graph("p 2 2\ne 0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("e 0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p 2 1\nz 0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 5\n"), validation_error);
}

TEST_CASE("serialize then parse is the identity") {
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = erdos_renyi(rng.uniform_int(0, 9), 0.4, rng);
        std::string text = serialize_graph(g);
        Graph h = parse_graph(text);
        CHECK(h.vertex_count() == g.vertex_count());
        CHECK(h.edges() == g.edges());
        CHECK(serialize_graph(h) == text);
    }
}

TEST_CASE("max degree") {
    CHECK(max_degree(complete_graph(3)) == 2);
    CHECK(max_degree(complete_bipartite(1, 4)) == 4);  // star
    CHECK(max_degree(Graph::from_edges(5, {})) == 0);
}

TEST_CASE("chromatic number basics") {
    CHECK(chromatic_number(complete_graph(3)) == 3);
    CHECK(chromatic_number(complete_bipartite(2, 3)) == 2);
    CHECK(chromatic_number(grid_graph(2, 3)) == 2);
    CHECK(chromatic_number(cycle_graph(5)) == brute_chromatic(cycle_graph(5)));
    CHECK(chromatic_number(cycle_graph(5)) == 3);
}

TEST_CASE("chromatic number against brute enumeration") {
    Rng rng(11);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = erdos_renyi(rng.uniform_int(1, 6), 0.5, rng);
        CHECK(chromatic_number(g) == brute_chromatic(g));
    }
}

TEST_CASE("chromatic number greedy bound and cap") {
    Rng rng(13);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = erdos_renyi(rng.uniform_int(1, 8), 0.4, rng);
        CHECK(chromatic_number(g) <= max_degree(g) + 1);
    }
    Graph big = Graph::from_edges(25, {{0, 1}});
    CHECK_THROWS_AS(chromatic_number(big), size_error);
}

TEST_CASE("bipartite detection") {
    CHECK(is_bipartite(cycle_graph(4)).bipartite);
    CHECK_FALSE(is_bipartite(complete_graph(3)).bipartite);
    auto r = is_bipartite(grid_graph(3, 3));
    REQUIRE(r.bipartite);
    Graph g = grid_graph(3, 3);
    for (const auto& [u, v] : g.edges()) CHECK(r.coloring[u] != r.coloring[v]);
    // bipartite implies 2-colorable
    CHECK(chromatic_number(g) <= 2);
}

TEST_CASE("planarity on the standard families") {
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK(is_planar(complete_bipartite(2, 5)));
    CHECK(is_planar(grid_graph(5, 5)));
    CHECK(is_planar(cycle_graph(12)));
    CHECK_FALSE(is_planar(petersen_graph()));
    CHECK_FALSE(is_planar(complete_graph(6)));
    // octahedron = K_{2,2,2}
    Graph octa = Graph::from_edges(
        6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
            {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    CHECK(is_planar(octa));
}

TEST_CASE("planarity is subdivision invariant") {
    Rng rng(17);
    Graph k5 = complete_graph(5);
    Graph k33 = complete_bipartite(3, 3);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = rep % 2 ? k5 : k33;
        for (int step = 0; step < 6; ++step)
            g = subdivide_edge(g, rng.uniform_int(0, g.edge_count() - 1));
        CHECK_FALSE(is_planar(g));
    }
    Graph planar = grid_graph(3, 4);
    for (int step = 0; step < 8; ++step)
        planar = subdivide_edge(planar, rng.uniform_int(0, planar.edge_count() - 1));
    CHECK(is_planar(planar));
}

TEST_CASE("planarity exhaustive to six vertices") {
    for (int n = 1; n <= 6; ++n) {
        unsigned edge_slots = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << edge_slots); ++mask) {
            Graph g = graph_from_mask(n, mask);
            bool want = brute_planar_upto6(g);
            if (is_planar(g) != want) {
                CAPTURE(n);
                CAPTURE(mask);
                REQUIRE(is_planar(g) == want);
            }
        }
    }
}

TEST_CASE("planar graphs respect the edge bound") {
    Rng rng(23);
    for (int rep = 0; rep < 200; ++rep) {
        int n = rng.uniform_int(3, 10);
        Graph g = erdos_renyi(n, 0.5, rng);
        if (is_planar(g)) CHECK(g.edge_count() <= 3 * n - 6);
    }
}

TEST_CASE("triangle finder") {
    CHECK(find_triangle(complete_graph(3)).has_value());
    CHECK_FALSE(find_triangle(grid_graph(3, 3)).has_value());
    auto t = find_triangle(complete_graph(5));
    REQUIRE(t.has_value());
    auto [a, b, c] = *t;
    CHECK(complete_graph(5).has_edge(a, b));
}

} // TEST_SUITE
