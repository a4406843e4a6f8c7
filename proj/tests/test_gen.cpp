#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "recolor/gen.hpp"

using namespace recolor;

TEST_CASE("grid") {
    auto g = gen::grid(2, 2);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    CHECK(g.outer_cycle().size() == 4);  // the 2x2 grid is C4
    auto big = gen::grid(3, 5);
    CHECK(big.num_vertices() == 15);
    CHECK(big.num_edges() == 3 * 4 + 5 * 2);
    CHECK(!big.contains_triangle());
    CHECK(big.internal(6));  // row 1, col 1
}

TEST_CASE("cycle and wheel") {
    auto c = gen::cycle(5);
    CHECK(c.num_edges() == 5);
    CHECK(c.outer_cycle().size() == 5);
    auto w = gen::wheel(6);
    CHECK(w.num_vertices() == 7);
    CHECK(w.num_edges() == 12);
    CHECK(w.internal(6));
    for (int i = 0; i < 6; ++i) CHECK(w.adjacent(i, 6));
}

TEST_CASE("stacked triangulation") {
    auto g = gen::stacked_triangulation(12, 42);
    CHECK(g.num_vertices() == 12);
    CHECK(g.num_edges() == 3 * 12 - 6);  // full triangulation
    CHECK(g.outer_cycle().size() == 3);
    // deterministic per seed
    CHECK(gen::stacked_triangulation(12, 42).serialize() == g.serialize());
    CHECK(gen::stacked_triangulation(12, 43).serialize() != g.serialize());
}

TEST_CASE("random planar subgraph stays connected and planar") {
    for (uint64_t seed : {1u, 2u, 3u}) {
        auto g = gen::random_planar(20, 0.6, seed);
        CHECK(g.num_vertices() == 20);
        CHECK(g.connected());
        CHECK(g.num_edges() <= 3 * 20 - 6);
    }
}

TEST_CASE("random grid subgraph is triangle-free and connected") {
    for (uint64_t seed : {5u, 6u}) {
        auto g = gen::random_grid_subgraph(4, 5, 0.7, seed);
        CHECK(g.num_vertices() == 20);
        CHECK(g.connected());
        CHECK(!g.contains_triangle());
    }
}

TEST_CASE("p_dn") {
    auto g = gen::p_dn(2, 5);
    // path on 4 vertices plus one vertex adjacent to all of them
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 3 + 4);
    Vertex apex = -1;
    for (Vertex v : g.vertices())
        if (g.degree(v) == 4) apex = v;
    REQUIRE(apex != -1);
    for (Vertex v : g.vertices())
        if (v != apex) CHECK(g.adjacent(v, apex));

    auto h = gen::p_dn(3, 6);  // 4-path + 2 universal vertices
    CHECK(h.num_vertices() == 6);
    CHECK(h.num_edges() == 3 + 1 + 2 * 4);

    CHECK_THROWS_AS(gen::p_dn(4, 8), BadParams);
    CHECK_THROWS_AS(gen::p_dn(1, 4), BadParams);
}

TEST_CASE("random_coloring is proper and in range") {
    for (uint64_t seed : {1u, 9u, 77u}) {
        auto g = gen::stacked_triangulation(15, seed);
        auto phi = gen::random_coloring(g, 5, seed);
        CHECK(g.proper(phi));
        for (Vertex v : g.vertices()) {
            CHECK(phi[v] >= 1);
            CHECK(phi[v] <= 5);
        }
    }
}

TEST_CASE("random_degenerate honors the bound") {
    for (int d : {1, 2, 3}) {
        for (uint64_t seed : {10u, 20u}) {
            auto g = gen::random_degenerate(12, d, seed);
            CHECK(degeneracy_ordering(g).degeneracy <= d);
        }
    }
}
