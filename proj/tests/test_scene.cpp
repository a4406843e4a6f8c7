#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "recolor/gen.hpp"
#include "recolor/oracle.hpp"
#include "recolor/scene.hpp"

using namespace recolor;

namespace {

ListAssignment uniform_lists(const PlaneGraph& g, ColorSet boundary, ColorSet internal) {
    ListAssignment l(g.universe());
    for (Vertex v : g.vertices()) l[v] = g.internal(v) ? internal : boundary;
    return l;
}

Coloring on_h(const PlaneGraph& g, const std::vector<Vertex>& h, std::vector<Color> cs) {
    Coloring phi(g.universe(), 0);
    for (size_t i = 0; i < h.size(); ++i) phi[h[i]] = cs[i];
    return phi;
}

void check_solution(const Scene& s, const SolveResult& r) {
    // endpoints agree with delta on H and the H-part of the witness is beta
    for (Vertex v : s.h) {
        CHECK(r.trajectory.c1[v] == s.delta.c1[v]);
        CHECK(r.trajectory.c2[v] == s.delta.c2[v]);
    }
    CHECK(restrict_sequence(r.witness.phase1, s.h, true) == s.beta.phase1);
    CHECK(restrict_sequence(r.witness.phase2, s.h, true) == s.beta.phase2);
    CHECK(r.trajectory.c0 == s.phi0);
}

}  // namespace

TEST_CASE("base case: H covers the whole graph") {
    auto g = gen::cycle(6);
    std::vector<Vertex> h = g.outer_cycle();
    Coloring phi0{1, 2, 1, 2, 1, 2};
    Scene s{g,
            h,
            uniform_lists(g, ColorSet::range(1, 6), ColorSet::range(1, 10)),
            uniform_lists(g, ColorSet::range(1, 7), ColorSet::range(1, 9)),
            phi0,
            {phi0, {3, 2, 1, 2, 1, 2}, {3, 4, 1, 2, 1, 2}},
            {{{0, 3}}, {{1, 4}}}};
    s.validate_structure();
    REQUIRE(check_valid(s, Mode::General).valid);
    auto r = solve(s, Mode::General);
    CHECK(r.witness.phase1 == s.beta.phase1);
    CHECK(r.witness.phase2 == s.beta.phase2);
    check_solution(s, r);
}

TEST_CASE("6-cycle with a 3-path boundary segment") {
    auto g = gen::cycle(6);
    std::vector<Vertex> h{0, 1, 2};
    Coloring phi0{1, 2, 1, 2, 1, 2};
    Scene s{g,
            h,
            uniform_lists(g, ColorSet::range(1, 6), ColorSet::range(1, 10)),
            uniform_lists(g, ColorSet::range(1, 7), ColorSet::range(1, 9)),
            phi0,
            {on_h(g, h, {1, 2, 1}), on_h(g, h, {3, 2, 1}), on_h(g, h, {3, 4, 1})},
            {{{0, 3}}, {{1, 4}}}};
    s.validate_structure();
    REQUIRE(check_valid(s, Mode::General).valid);
    auto r = solve(s, Mode::General);
    check_solution(s, r);
    CHECK(r.witness.length() <= 8 * 6);

    auto brute = oracle::brute_scene_trajectory(s);
    CHECK(brute.exists);
}

TEST_CASE("check_valid flags small internal lists") {
    auto g = gen::wheel(5);  // hub 5 internal
    std::vector<Vertex> h{0, 1};
    Coloring phi0{1, 2, 1, 2, 3, 4};
    Scene s{g,
            h,
            uniform_lists(g, ColorSet::range(1, 6), ColorSet::range(1, 9)),
            uniform_lists(g, ColorSet::range(1, 7), ColorSet::range(1, 9)),
            phi0,
            {on_h(g, h, {1, 2}), on_h(g, h, {1, 2}), on_h(g, h, {1, 2})},
            {}};
    auto rep = check_valid(s, Mode::General);
    CHECK(!rep.valid);
    bool saw_gb = false;
    for (auto& v : rep.violated) saw_gb |= v.tag == "Gb";
    CHECK(saw_gb);
}

TEST_CASE("check_valid flags the forbidden list over a dominated triangle segment") {
    auto g = gen::wheel(5);
    std::vector<Vertex> h{0, 1, 2};  // hub 5 is adjacent to all of H
    Coloring phi0{1, 2, 3, 1, 2, 4};
    Scene s{g,
            h,
            uniform_lists(g, ColorSet::range(1, 6), ColorSet::range(1, 6)),
            uniform_lists(g, ColorSet::range(1, 7), ColorSet::range(1, 9)),
            phi0,
            {on_h(g, h, {1, 2, 3}), on_h(g, h, {4, 5, 6}), on_h(g, h, {4, 5, 6})},
            {{{0, 4}, {1, 5}, {2, 6}}, {}}};
    auto rep = check_valid(s, Mode::General);
    CHECK(!rep.valid);
    bool saw_gc = false;
    for (auto& v : rep.violated) saw_gc |= v.tag == "Gc";
    CHECK(saw_gc);
}

TEST_CASE("check_valid rejects a triangle in triangle-free mode") {
    auto g = gen::wheel(5);
    std::vector<Vertex> h{0, 1};
    Coloring phi0{1, 2, 1, 2, 3, 4};
    Scene s{g,
            h,
            uniform_lists(g, ColorSet::range(1, 5), ColorSet::range(1, 7)),
            uniform_lists(g, ColorSet::range(1, 5), ColorSet::range(1, 6)),
            phi0,
            {on_h(g, h, {1, 2}), on_h(g, h, {1, 2}), on_h(g, h, {1, 2})},
            {}};
    auto rep = check_valid(s, Mode::TriangleFree);
    CHECK(!rep.valid);
    bool saw = false;
    for (auto& v : rep.violated) saw |= v.tag == "triangle";
    CHECK(saw);
}

TEST_CASE("triangle-free: 5-cycle with one internal vertex") {
    auto g = PlaneGraph::parse(
        "n 6\n"
        "rot 0: 4 1 5\n"
        "rot 1: 0 2\n"
        "rot 2: 1 3 5\n"
        "rot 3: 2 4\n"
        "rot 4: 3 0\n"
        "rot 5: 0 2\n"
        "outer: 0 1 2 3 4\n");
    CHECK(g.internal(5));
    std::vector<Vertex> h{0, 1, 2};
    Coloring phi0{1, 2, 1, 2, 3, 2};
    Scene s{g,
            h,
            uniform_lists(g, ColorSet::range(1, 5), ColorSet::range(1, 7)),
            uniform_lists(g, ColorSet::range(1, 5), ColorSet::range(1, 6)),
            phi0,
            {on_h(g, h, {1, 2, 1}), on_h(g, h, {1, 3, 1}), on_h(g, h, {2, 3, 1})},
            {{{1, 3}}, {{0, 2}}}};
    s.validate_structure();
    REQUIRE(check_valid(s, Mode::TriangleFree).valid);
    auto r = solve(s, Mode::TriangleFree);
    check_solution(s, r);
    CHECK(r.witness.length() <= 7 * 6);

    auto brute = oracle::brute_scene_trajectory(s);
    CHECK(brute.exists);
}

TEST_CASE("stable_outer keeps the second phase on H") {
    auto g = gen::cycle(6);
    std::vector<Vertex> h{0, 1, 2};
    Coloring phi0{1, 2, 1, 2, 1, 2};
    Scene s{g,
            h,
            uniform_lists(g, ColorSet::range(1, 6), ColorSet::range(1, 10)),
            uniform_lists(g, ColorSet::range(1, 7), ColorSet::range(1, 9)),
            phi0,
            {on_h(g, h, {1, 2, 1}), on_h(g, h, {3, 2, 1}), on_h(g, h, {3, 4, 1})},
            {{{0, 3}}, {{1, 4}}}};
    auto r = stable_outer(s, Mode::General);
    for (Vertex v : {3, 4, 5}) CHECK(r.trajectory.c2[v] == r.trajectory.c1[v]);
    check_solution(s, r);
}

TEST_CASE("scene dump round trip") {
    auto g = gen::cycle(6);
    std::vector<Vertex> h{0, 1, 2};
    Coloring phi0{1, 2, 1, 2, 1, 2};
    Scene s{g,
            h,
            uniform_lists(g, ColorSet::range(1, 6), ColorSet::range(1, 10)),
            uniform_lists(g, ColorSet::range(1, 7), ColorSet::range(1, 9)),
            phi0,
            {on_h(g, h, {1, 2, 1}), on_h(g, h, {3, 2, 1}), on_h(g, h, {3, 4, 1})},
            {{{0, 3}}, {{1, 4}}}};
    Scene t = parse_scene_dump(dump_scene(s));
    t.validate_structure();
    CHECK(t.g.serialize() == s.g.serialize());
    CHECK(t.h == s.h);
    CHECK(t.l1 == s.l1);
    CHECK(t.l2 == s.l2);
    CHECK(t.phi0 == s.phi0);
    CHECK(t.delta.c2 == s.delta.c2);
    CHECK(t.beta.phase1 == s.beta.phase1);
    CHECK(t.beta.phase2 == s.beta.phase2);
    CHECK(dump_scene(t) == dump_scene(s));
}

TEST_CASE("wheel instance with an internal hub solves in general mode") {
    auto g = gen::wheel(5);
    std::vector<Vertex> h{0, 1};
    Coloring phi0{1, 2, 1, 2, 3, 4};
    Scene s{g,
            h,
            uniform_lists(g, ColorSet::range(1, 6), ColorSet::range(1, 10)),
            uniform_lists(g, ColorSet::range(1, 7), ColorSet::range(1, 9)),
            phi0,
            {on_h(g, h, {1, 2}), on_h(g, h, {5, 2}), on_h(g, h, {5, 6})},
            {{{0, 5}}, {{1, 6}}}};
    s.validate_structure();
    REQUIRE(check_valid(s, Mode::General).valid);
    auto r = solve(s, Mode::General);
    check_solution(s, r);
    CHECK(r.witness.length() <= 8 * 6);
}
