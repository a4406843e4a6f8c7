#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "recolor/gen.hpp"
#include "recolor/kernel.hpp"

using namespace recolor;

namespace {

Graph k2() { return Graph::from_edges(2, {{0, 1}}); }
Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("apply_sequence basics") {
    Coloring phi{1, 2};
    CHECK(apply_sequence(k2(), phi, {{0, 3}, {1, 1}}) == Coloring{3, 1});
    CHECK_THROWS_AS(apply_sequence(k2(), phi, {{0, 2}}), ImproperStep);

    Coloring p{1, 2, 1};
    CHECK_THROWS_AS(apply_sequence(path3(), p, {{0, 2}}), ImproperStep);
    CHECK(apply_sequence(path3(), p, {{1, 3}, {0, 2}}) == Coloring{2, 3, 1});
}

TEST_CASE("apply_sequence constraint flags") {
    Coloring phi{1, 2};
    ApplyOptions once;
    once.once_only = true;
    CHECK_THROWS_AS(apply_sequence(k2(), phi, {{0, 3}, {0, 4}}, once), OnceOnlyViolation);

    ListAssignment l(2, ColorSet::range(1, 3));
    ApplyOptions lists;
    lists.lists = &l;
    CHECK_THROWS_AS(apply_sequence(k2(), phi, {{0, 4}}, lists), ListViolation);

    std::vector<Vertex> late{0};
    ApplyOptions ls;
    ls.late_set = &late;
    CHECK_THROWS_AS(apply_sequence(k2(), phi, {{0, 3}, {1, 1}}, ls), LatenessViolation);
    CHECK(apply_sequence(k2(), phi, {{1, 3}, {0, 2}}, ls) == Coloring{2, 3});

    ApplyOptions twice;
    twice.max_per_vertex = 2;
    CHECK_THROWS_AS(apply_sequence(k2(), phi, {{0, 3}, {0, 4}, {0, 3}}, twice),
                    MaxRecoloringsViolation);

    // no-op steps are rejected (normalized form)
    CHECK_THROWS_AS(apply_sequence(k2(), phi, {{0, 1}}), ImproperStep);
}

TEST_CASE("reverse round trip") {
    Coloring phi{1, 2, 1};
    Sequence s{{1, 3}, {0, 2}, {2, 2}};
    auto g = path3();
    Coloring end = apply_sequence(g, phi, s);
    Sequence r = reverse_sequence(g, phi, s);
    CHECK(r.size() == s.size());
    CHECK(apply_sequence(g, end, r) == phi);
    CHECK(reverse_sequence(g, phi, Sequence{}).empty());
    CHECK(reverse_sequence(g, phi, Sequence{{1, 3}}) == Sequence{{1, 2}});
}

TEST_CASE("reorder_witness keeps the non-H prefix and splices the new H part") {
    auto g = path3();
    std::vector<Vertex> h{2};
    Coloring phi0{1, 2, 1};
    Witness omega{{{0, 3}, {2, 3}}, {{1, 4}}};
    Witness sigma_h{{{2, 3}}, {}};
    Witness pi = reorder_witness(g, h, phi0, omega, sigma_h);
    CHECK(pi.phase1 == Sequence{{0, 3}, {2, 3}});
    CHECK(pi.phase2 == Sequence{{1, 4}});
}

TEST_CASE("reorder_witness rejects wrong endpoints") {
    auto g = path3();
    Coloring phi0{1, 2, 1};
    Witness omega{{{0, 3}, {2, 3}}, {}};
    Witness bad{{{2, 4}}, {}};
    CHECK_THROWS_AS(reorder_witness(g, {2}, phi0, omega, bad), IncompatibleEndpoints);
}

TEST_CASE("combine across a shared vertex") {
    // g = path 0-1-2-3; g1 = 0-1-2, g2 = 2-3, P = {2}
    auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto g1 = g.induced({0, 1, 2});
    auto g2 = g.induced({2, 3});
    Coloring phi0{1, 2, 1, 2};
    std::vector<Vertex> h{0};
    // W1 on g1, H-late: recolor 2 then 1 then the H vertex 0
    Witness w1{{{2, 3}, {1, 4}, {0, 2}}, {}};
    // W2 on g2, P-late: 3 moves first, then 2 to the same endpoint as in W1
    Witness w2{{{3, 4}, {2, 3}}, {}};
    Witness out = combine(g, g1, g2, h, phi0, w1, w2);
    Coloring end = apply_sequence(g, phi0, out.phase1);
    CHECK(end == Coloring{2, 4, 3, 4});
    // mismatched endpoints refused
    Witness bad{{{3, 4}, {2, 5}}, {}};
    CHECK_THROWS_AS(combine(g, g1, g2, h, phi0, w1, bad), IntersectionMismatch);
}

TEST_CASE("find_once_only_order solves and respects lateness") {
    auto g = path3();
    Coloring from{1, 2, 1}, to{3, 4, 2};
    auto seq = find_once_only_order(g, from, to, {});
    REQUIRE(seq.has_value());
    ApplyOptions once;
    once.once_only = true;
    CHECK(apply_sequence(g, from, *seq, once) == to);

    std::vector<Vertex> late{0};
    auto seq2 = find_once_only_order(g, from, to, late);
    REQUIRE(seq2.has_value());
    ApplyOptions opts;
    opts.once_only = true;
    opts.late_set = &late;
    CHECK(apply_sequence(g, from, *seq2, opts) == to);

    // K2 with 2 colors: swap impossible once-only
    CHECK(!find_once_only_order(k2(), {1, 2}, {2, 1}, {}).has_value());
}

TEST_CASE("randomized reverse property") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        Graph g = gen::random_degenerate(6, 2, rng());
        Coloring phi = gen::random_coloring(g, 6, rng());
        Coloring cur = phi;
        Sequence s;
        for (int steps = 0; steps < 12; ++steps) {
            Vertex v = std::uniform_int_distribution<int>(0, 5)(rng);
            ColorSet avail = ColorSet::range(1, 6);
            avail.erase(cur[v]);
            for (Vertex u : g.neighbors(v)) avail.erase(cur[u]);
            if (avail.empty()) continue;
            auto cs = avail.to_vector();
            Color c = cs[std::uniform_int_distribution<size_t>(0, cs.size() - 1)(rng)];
            s.push_back({v, c});
            cur[v] = c;
        }
        Sequence r = reverse_sequence(g, phi, s);
        CHECK(apply_sequence(g, cur, r) == phi);
        CHECK(r.size() == s.size());
    }
}
