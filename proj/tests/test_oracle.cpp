#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "recolor/gen.hpp"
#include "recolor/oracle.hpp"

using namespace recolor;
using namespace recolor::oracle;

TEST_CASE("reconfig graph of K2") {
    auto g = Graph::from_edges(2, {{0, 1}});
    auto r = build_reconfig_graph(g, 3);
    CHECK(r.states.size() == 6);  // 3*2 proper pairs
    for (auto& m : r.moves) CHECK(m.size() == 2);  // R_3(K2) is a 6-cycle

    CHECK(reconfig_distance(g, 3, {1, 2}, {1, 2}) == 0);
    CHECK(reconfig_distance(g, 3, {1, 2}, {1, 3}) == 1);
    CHECK(reconfig_distance(g, 3, {1, 2}, {2, 1}) == 3);
    CHECK_THROWS_AS(reconfig_distance(g, 2, {1, 2}, {2, 1}), Unreachable);
}

TEST_CASE("single vertex") {
    Graph g(1);
    CHECK(reconfig_distance(g, 2, {1}, {2}) == 1);
    CHECK(reconfig_diameter(g, 2) == 1);
}

TEST_CASE("diameters") {
    auto k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(reconfig_diameter(k2, 2) == std::nullopt);  // two frozen colorings
    CHECK(reconfig_diameter(k2, 3) == 3);
    CHECK(reconfig_diameter(gen::cycle(4).skeleton(), 3) > 0);
}

TEST_CASE("state cap") {
    auto g = gen::grid(3, 3).skeleton();
    CHECK_THROWS_AS(build_reconfig_graph(g, 8, 1000), StateSpaceTooLarge);
}

TEST_CASE("exact list coloring") {
    auto k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    ListAssignment l(3, ColorSet{1, 2, 3});
    auto phi = exact_list_coloring(k3, l);
    REQUIRE(phi.has_value());
    CHECK(*phi == Coloring{1, 2, 3});  // lexicographically first

    ListAssignment tight(3, ColorSet{1, 2});
    CHECK(!exact_list_coloring(k3, tight).has_value());

    ListAssignment mixed{ColorSet{2}, ColorSet{2, 3}, ColorSet{3, 4}};
    auto psi = exact_list_coloring(k3, mixed);
    REQUIRE(psi.has_value());
    CHECK(*psi == Coloring{2, 3, 4});
}

TEST_CASE("brute scene search on a tiny scene") {
    auto g = gen::cycle(4);
    std::vector<Vertex> h{0, 1};
    Coloring phi0{1, 2, 1, 2};
    ListAssignment l1(4, ColorSet::range(1, 6)), l2(4, ColorSet::range(1, 7));
    Coloring d1{3, 2, 0, 0}, d2{3, 4, 0, 0};
    Scene s{g, h, l1, l2, phi0, {{1, 2, 0, 0}, d1, d2}, {{{0, 3}}, {{1, 4}}}};
    auto r = brute_scene_trajectory(s);
    REQUIRE(r.exists);
    // replay the found witness and hit the found trajectory
    ApplyOptions once;
    once.once_only = true;
    auto c1 = apply_sequence(g, phi0, r.witness.phase1, once);
    CHECK(c1 == r.trajectory.c1);
    auto c2 = apply_sequence(g, c1, r.witness.phase2, once);
    CHECK(c2 == r.trajectory.c2);
    CHECK(c1[0] == 3);
    CHECK(c2[1] == 4);

}

TEST_CASE("brute reports impossibility") {
    // K2 with vertex 1 frozen at color 2; delta wants 0 at color 2 too
    auto rot = std::vector<std::vector<Vertex>>{{1}, {0}};
    auto g = PlaneGraph::from_rotations(rot, {0, 1});
    ListAssignment l1{ColorSet{1, 2}, ColorSet{2}};
    Scene s{g, {0}, l1, l1, {1, 2}, {{1, 0}, {2, 0}, {2, 0}}, {{{0, 2}}, {}}};
    auto r = brute_scene_trajectory(s);
    CHECK(!r.exists);
}

TEST_CASE("brute matches the base case") {
    auto g = gen::cycle(3);
    std::vector<Vertex> h = g.outer_cycle();
    Coloring phi0{1, 2, 3};
    ListAssignment l1(3, ColorSet::range(1, 6)), l2(3, ColorSet::range(1, 7));
    Scene s{g, h, l1, l2, phi0, {phi0, {4, 2, 3}, {4, 5, 3}}, {{{0, 4}}, {{1, 5}}}};
    auto r = brute_scene_trajectory(s);
    REQUIRE(r.exists);
    CHECK(r.trajectory.c1 == Coloring{4, 2, 3});
    CHECK(r.trajectory.c2 == Coloring{4, 5, 3});
}
