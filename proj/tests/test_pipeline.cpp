#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "recolor/gen.hpp"
#include "recolor/oracle.hpp"
#include "recolor/pipeline.hpp"

using namespace recolor;

namespace {

void check_elimination(const PlaneGraph& g, const ListAssignment& l, const Coloring& phi,
                       const std::vector<Color>& f, Mode mode) {
    auto r = eliminate_color(g, l, phi, f, mode);
    ApplyOptions opts;
    opts.lists = &l;
    opts.max_per_vertex = 2;
    CHECK(apply_sequence(g, phi, r.sequence, opts) == r.final);
    for (Vertex v : g.vertices()) CHECK(r.final[v] != f[v]);
}

}  // namespace

TEST_CASE("eliminate_color on a single vertex") {
    PlaneGraph g = PlaneGraph::parse("n 1\nouter: 0\n");
    ListAssignment l(1, ColorSet::range(1, 10));
    auto r = eliminate_color(g, l, {5}, {5}, Mode::General);
    CHECK(r.final[0] == 1);
    CHECK(r.sequence == Sequence{{0, 1}});
    check_elimination(g, l, {5}, {5}, Mode::General);
}

TEST_CASE("eliminate_color over random instances") {
    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        auto g = gen::stacked_triangulation(5 + it % 20, rng());
        ListAssignment l(g.universe(), ColorSet::range(1, 10));
        Coloring phi = gen::random_coloring(g, 10, rng());
        std::vector<Color> f(g.universe());
        for (Vertex v : g.vertices()) f[v] = 1 + (int)(rng() % 10);
        check_elimination(g, l, phi, f, Mode::General);
    }
    for (int it = 0; it < 20; ++it) {
        auto g = gen::random_grid_subgraph(3, 3 + it % 4, 0.8, rng());
        ListAssignment l(g.universe(), ColorSet::range(1, 7));
        Coloring phi = gen::random_coloring(g, 7, rng());
        std::vector<Color> f(g.universe());
        for (Vertex v : g.vertices()) f[v] = 1 + (int)(rng() % 7);
        check_elimination(g, l, phi, f, Mode::TriangleFree);
    }
}

TEST_CASE("independent_set_degenerate") {
    auto star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});  // K_{1,3}, 1-degenerate
    auto i = independent_set_degenerate(star, 0);
    // remainder must be edgeless and i independent
    for (size_t a = 0; a < i.size(); ++a)
        for (size_t b = a + 1; b < i.size(); ++b) CHECK(!star.adjacent(i[a], i[b]));
    CHECK(degeneracy_ordering(star.without(i)).degeneracy <= 0);

    auto k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto j = independent_set_degenerate(k4, 2);
    CHECK(j.size() == 1);
    CHECK(degeneracy_ordering(k4.without(j)).degeneracy <= 2);

    std::mt19937 rng(3);
    for (int it = 0; it < 15; ++it) {
        auto g = gen::stacked_triangulation(8 + it * 3, rng()).skeleton();
        auto is = independent_set_degenerate(g, 3);
        for (size_t a = 0; a < is.size(); ++a)
            for (size_t b = a + 1; b < is.size(); ++b) CHECK(!g.adjacent(is[a], is[b]));
        CHECK(degeneracy_ordering(g.without(is)).degeneracy <= 3);
    }
}

TEST_CASE("degenerate_recolor") {
    Graph one(1);
    CHECK(degenerate_recolor(one, 0, 2, {1}, {2}) == Sequence{{0, 2}});
    CHECK(degenerate_recolor(one, 0, 2, {1}, {1}).empty());

    auto path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    Coloring a{1, 2, 1, 2}, b{2, 1, 2, 1};
    auto s = degenerate_recolor(path, 1, 4, a, b);
    CHECK(apply_sequence(path, a, s) == b);
    CHECK((int)s.size() <= 2 * 2 * 4);

    std::mt19937 rng(9);
    for (int it = 0; it < 25; ++it) {
        int n = 5 + it;
        auto g = gen::random_degenerate(n, 3, rng());
        Coloring x = gen::random_coloring(g, 8, rng());
        Coloring y = gen::random_coloring(g, 8, rng());
        auto seq = degenerate_recolor(g, 3, 8, x, y);
        CHECK(apply_sequence(g, x, seq) == y);
        CHECK((int)seq.size() <= 2 * 4 * n);
    }
}

TEST_CASE("recolor_planar end to end") {
    auto k4 = gen::stacked_triangulation(4, 1);
    Coloring a = gen::random_coloring(k4, 10, 5);
    Coloring b = gen::random_coloring(k4, 10, 6);
    auto plan = recolor_planar(k4, a, b, 10, Mode::General);
    CHECK(plan.total_length <= 8 * 4);
    CHECK(apply_sequence(k4, a, plan.flat()) == b);

    auto grid = gen::grid(4, 4);
    Coloring ga = gen::random_coloring(grid, 7, 7);
    Coloring gb = gen::random_coloring(grid, 7, 8);
    auto gplan = recolor_planar(grid, ga, gb, 7, Mode::TriangleFree);
    CHECK(gplan.total_length <= 7 * 16);
    CHECK(apply_sequence(grid, ga, gplan.flat()) == gb);
    for (size_t x = 0; x < gplan.independent_set.size(); ++x)
        for (size_t y = x + 1; y < gplan.independent_set.size(); ++y)
            CHECK(!grid.adjacent(gplan.independent_set[x], gplan.independent_set[y]));
}

TEST_CASE("recolor_planar on an edgeless graph") {
    auto g = PlaneGraph::parse("n 1\nouter: 0\n");
    auto plan = recolor_planar(g, {3}, {4}, 10, Mode::General);
    CHECK(apply_sequence(g, {3}, plan.flat()) == Coloring{4});
    CHECK(plan.total_length <= 8);
}

TEST_CASE("degchos_recolor replays the degeneracy order") {
    ListSolver solver = [](const Graph& g, const ListAssignment& l) {
        auto phi = oracle::exact_list_coloring(g, l);
        REQUIRE(phi.has_value());
        return *phi;
    };
    std::mt19937 rng(21);
    for (int it = 0; it < 20; ++it) {
        int n = 4 + it % 8, d = 2, c = d + 2;
        auto g = gen::random_degenerate(n, d, rng());
        Coloring alpha = gen::random_coloring(g, c, rng());
        auto s = degchos_recolor(g, alpha, c, d, solver);
        ApplyOptions once;
        once.once_only = true;
        auto out = apply_sequence(g, alpha, s, once);
        for (Vertex v : g.vertices()) CHECK(out[v] != c + d + 1);
    }
}

TEST_CASE("degchos_recolor rejects a lying solver") {
    ListSolver bad = [](const Graph& g, const ListAssignment&) {
        return Coloring(g.universe(), 1);
    };
    auto g = Graph::from_edges(2, {{0, 1}});
    CHECK_THROWS_AS(degchos_recolor(g, {1, 2}, 4, 1, bad), ListSolverFailed);
}

TEST_CASE("serialize_plan header") {
    auto k4 = gen::stacked_triangulation(4, 1);
    Coloring a = gen::random_coloring(k4, 10, 5);
    Coloring b = gen::random_coloring(k4, 10, 6);
    auto plan = recolor_planar(k4, a, b, 10, Mode::General);
    auto text = serialize_plan(plan, 4, 10, Mode::General);
    CHECK(text.rfind("plan ", 0) == 0);
    CHECK(text.find("n=4") != std::string::npos);
    CHECK(text.find("k=10") != std::string::npos);
}
