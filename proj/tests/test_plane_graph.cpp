#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "recolor/gen.hpp"
#include "recolor/plane_graph.hpp"

using namespace recolor;

namespace {

const char* kBowtie =
    "n 5\n"
    "rot 0: 1 2\n"
    "rot 1: 2 0\n"
    "rot 2: 0 1 3 4\n"
    "rot 3: 4 2\n"
    "rot 4: 2 3\n"
    "outer: 0 1 2 3 4 2\n";

const char* kC5Chord =
    "n 5\n"
    "rot 0: 4 1 2\n"
    "rot 1: 0 2\n"
    "rot 2: 1 3 0\n"
    "rot 3: 2 4\n"
    "rot 4: 3 0\n"
    "outer: 0 1 2 3 4\n";

// 6-cycle with an internal hub adjacent to rim vertices 0, 2, 4.
const char* kFanHost =
    "n 7\n"
    "rot 0: 5 1 6\n"
    "rot 1: 0 2\n"
    "rot 2: 1 3 6\n"
    "rot 3: 2 4\n"
    "rot 4: 3 5 6\n"
    "rot 5: 4 0\n"
    "rot 6: 0 2 4\n"
    "outer: 0 1 2 3 4 5\n";

}  // namespace

TEST_CASE("triangle has two faces") {
    auto g = gen::stacked_triangulation(3, 1);
    CHECK(g.faces().size() == 2);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
}

TEST_CASE("K4 has four faces") {
    auto g = gen::stacked_triangulation(4, 1);
    CHECK(g.num_edges() == 6);
    CHECK(g.faces().size() == 4);
}

TEST_CASE("perturbed rotation fails validation") {
    auto g = gen::stacked_triangulation(4, 1);
    std::string text = g.serialize();
    // flip vertex 3's rotation: reverses its local orientation
    auto pos = text.find("rot 3: ");
    REQUIRE(pos != std::string::npos);
    auto eol = text.find('\n', pos);
    std::string line = text.substr(pos + 7, eol - pos - 7);
    std::string rev;
    {
        std::vector<std::string> toks;
        size_t i = 0;
        while (i < line.size()) {
            size_t j = line.find(' ', i);
            if (j == std::string::npos) j = line.size();
            toks.push_back(line.substr(i, j - i));
            i = j + 1;
        }
        std::reverse(toks.begin() + 1, toks.end());
        for (auto& t : toks) rev += t + " ";
        rev.pop_back();
    }
    text.replace(pos + 7, eol - pos - 7, rev);
    CHECK_THROWS_AS(PlaneGraph::parse(text), EmbeddingInvalid);
}

TEST_CASE("outer cycle of a 4-cycle") {
    auto g = gen::cycle(4);
    CHECK(g.outer_cycle() == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("wheel rim is the outer cycle") {
    auto g = gen::wheel(5);
    auto k = g.outer_cycle();
    CHECK(k.size() == 5);
    for (Vertex v : k) CHECK(v < 5);  // hub (5) stays inside
    CHECK(g.internal(5));
}

TEST_CASE("bowtie: outer cycle refused, cut-vertex split works") {
    auto g = PlaneGraph::parse(kBowtie);
    CHECK_THROWS_AS(g.outer_cycle(), NotACycle);
    auto [g1, g2] = split(g, {Separator::Kind::CutVertex, {2}}, 0);
    CHECK(g1.num_vertices() == 3);
    CHECK(g2.num_vertices() == 3);
    CHECK(g1.has(2));
    CHECK(g2.has(2));
    CHECK(g1.has(0));
    CHECK(g2.has(3));
}

TEST_CASE("5-cycle chord split") {
    auto g = PlaneGraph::parse(kC5Chord);
    auto chords = g.outer_chords();
    REQUIRE(chords.size() == 1);
    CHECK(chords[0] == std::pair<Vertex, Vertex>{0, 2});
    auto [g1, g2] = split(g, {Separator::Kind::Chord, {0, 2}}, 1);
    CHECK(g1.num_vertices() == 3);  // triangle 0,1,2
    CHECK(g1.has(1));
    CHECK(g2.num_vertices() == 4);  // 0,2,3,4
    CHECK(g2.has(3));
    CHECK(g2.has(4));
    CHECK(g1.num_vertices() + g2.num_vertices() == g.num_vertices() + 2);
}

TEST_CASE("non-facial cycle split pulls out the disk") {
    // K4 inside a larger host: take a stacked triangulation and find its
    // non-facial triangle via the reduction-site scan on an H-free scene.
    auto g = gen::stacked_triangulation(6, 5);
    auto sep = g.outer_cycle();
    CHECK(sep.size() == 3);
}

TEST_CASE("find_reduction_site basics") {
    auto c6 = gen::cycle(6);
    auto site = find_reduction_site(c6, {0, 1, 2}, Mode::General);
    CHECK(site.kind == ReductionSite::Kind::MainStep);

    auto g = PlaneGraph::parse(kC5Chord);
    auto s2 = find_reduction_site(g, {4, 0, 1}, Mode::General);
    CHECK(s2.kind == ReductionSite::Kind::OuterChord);
    CHECK(s2.inner_chord);

    auto fan = PlaneGraph::parse(kFanHost);
    auto s3 = find_reduction_site(fan, {5, 0, 1}, Mode::General);
    CHECK(s3.kind == ReductionSite::Kind::InternalFan);
    CHECK(s3.v == 6);

    // triangle-free priority puts degree-<=2 deletion ahead of the fan
    auto s4 = find_reduction_site(fan, {5, 0, 1}, Mode::TriangleFree);
    CHECK(s4.kind == ReductionSite::Kind::LowDegreeVertex);
    CHECK(s4.v == 3);
}

TEST_CASE("degeneracy ordering") {
    auto p5 = gen::grid(1, 5);
    CHECK(degeneracy_ordering(p5).degeneracy == 1);
    auto k4 = gen::stacked_triangulation(4, 1);
    CHECK(degeneracy_ordering(k4).degeneracy == 3);
    auto grid = gen::grid(5, 5);
    CHECK(degeneracy_ordering(grid).degeneracy <= 3);
    CHECK(verify_degeneracy(grid, degeneracy_ordering(grid)));
}

TEST_CASE("faces partition all darts") {
    auto g = gen::stacked_triangulation(9, 2);
    size_t darts = 0;
    for (auto& f : g.faces()) darts += f.size();
    CHECK(darts == 2 * static_cast<size_t>(g.num_edges()));
}

TEST_CASE("boundary segments") {
    auto c6 = gen::cycle(6);
    CHECK(is_boundary_segment(c6, {1, 2, 3}));
    CHECK(is_boundary_segment(c6, {3, 2, 1}));
    CHECK(is_boundary_segment(c6, {5, 0, 1}));
    CHECK(!is_boundary_segment(c6, {0, 2}));
    CHECK(segment_is_outer_cycle(c6, {0, 1, 2, 3, 4, 5}));
    CHECK(!segment_is_outer_cycle(c6, {0, 1, 2}));
}

TEST_CASE("serialize round trip") {
    auto g = gen::random_planar(14, 0.7, 11);
    auto h = PlaneGraph::parse(g.serialize());
    CHECK(h.num_vertices() == g.num_vertices());
    CHECK(h.num_edges() == g.num_edges());
    CHECK(h.outer_walk() == g.outer_walk());
}
