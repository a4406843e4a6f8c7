#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recolor/gen.hpp"
#include "recolor/oracle.hpp"
#include "recolor/pipeline.hpp"

namespace py = pybind11;
using namespace recolor;

namespace {

Mode parse_mode(const std::string& m) {
    if (m == "general") return Mode::General;
    if (m == "triangle-free") return Mode::TriangleFree;
    throw BadParams("mode must be 'general' or 'triangle-free'");
}

std::vector<std::pair<Vertex, Color>> to_pairs(const Sequence& s) {
    std::vector<std::pair<Vertex, Color>> out;
    out.reserve(s.size());
    for (auto& st : s) out.emplace_back(st.v, st.c);
    return out;
}

Sequence from_pairs(const std::vector<std::pair<Vertex, Color>>& p) {
    Sequence s;
    s.reserve(p.size());
    for (auto& [v, c] : p) s.push_back({v, c});
    return s;
}

}  // namespace

PYBIND11_MODULE(_planrecolor, m) {
    m.doc() = "planar recoloring sequences: plane graphs, plans, oracles";

    py::register_exception<Error>(m, "RecolorError");

    py::class_<PlaneGraph>(m, "PlaneGraph")
        .def_static("parse", [](const std::string& text) { return PlaneGraph::parse(text); })
        .def("serialize", &PlaneGraph::serialize)
        .def("num_vertices", &PlaneGraph::num_vertices)
        .def("num_edges", &PlaneGraph::num_edges)
        .def("vertices", &PlaneGraph::vertices)
        .def("neighbors", [](const PlaneGraph& g, Vertex v) { return g.neighbors(v); })
        .def("on_outer", &PlaneGraph::on_outer)
        .def("outer_walk", &PlaneGraph::outer_walk)
        .def("is_proper", [](const PlaneGraph& g, const Coloring& phi) { return g.proper(phi); })
        .def("triangle_free", [](const PlaneGraph& g) { return !g.contains_triangle(); });

    m.def("grid", &gen::grid, py::arg("rows"), py::arg("cols"));
    m.def("cycle", &gen::cycle, py::arg("n"));
    m.def("wheel", &gen::wheel, py::arg("rim"));
    m.def("stacked_triangulation", &gen::stacked_triangulation, py::arg("n"), py::arg("seed"));
    m.def("random_planar", &gen::random_planar, py::arg("n"), py::arg("keep_fraction"),
          py::arg("seed"));
    m.def("random_grid_subgraph", &gen::random_grid_subgraph, py::arg("rows"), py::arg("cols"),
          py::arg("keep_fraction"), py::arg("seed"));
    m.def(
        "random_coloring",
        [](const PlaneGraph& g, int k, uint64_t seed) { return gen::random_coloring(g, k, seed); },
        py::arg("g"), py::arg("k"), py::arg("seed"));

    m.def(
        "recolor_planar",
        [](const PlaneGraph& g, const Coloring& a, const Coloring& b, int k,
           const std::string& mode) {
            auto plan = recolor_planar(g, a, b, k, parse_mode(mode));
            py::dict d;
            d["steps"] = to_pairs(plan.flat());
            d["total_length"] = plan.total_length;
            d["budget"] = plan.budget;
            d["independent_set"] = plan.independent_set;
            return d;
        },
        py::arg("g"), py::arg("alpha"), py::arg("beta"), py::arg("k"), py::arg("mode"));

    m.def(
        "apply_steps",
        [](const PlaneGraph& g, const Coloring& phi,
           const std::vector<std::pair<Vertex, Color>>& steps) {
            return apply_sequence(g, phi, from_pairs(steps));
        },
        py::arg("g"), py::arg("phi"), py::arg("steps"));

    m.def(
        "eliminate_color",
        [](const PlaneGraph& g, const Coloring& phi, int span, const std::vector<Color>& f,
           const std::string& mode) {
            ListAssignment l(g.universe(), ColorSet::range(1, span));
            auto r = eliminate_color(g, l, phi, f, parse_mode(mode));
            return py::make_tuple(to_pairs(r.sequence), r.final);
        },
        py::arg("g"), py::arg("phi"), py::arg("span"), py::arg("forbidden"), py::arg("mode"));

    m.def(
        "oracle_distance",
        [](const PlaneGraph& g, int k, const Coloring& a, const Coloring& b, int64_t cap) {
            return oracle::reconfig_distance(g.skeleton(), k, a, b, cap);
        },
        py::arg("g"), py::arg("k"), py::arg("alpha"), py::arg("beta"),
        py::arg("cap") = oracle::kDefaultStateCap);

    m.def(
        "oracle_diameter",
        [](const PlaneGraph& g, int k, int64_t cap) -> py::object {
            auto d = oracle::reconfig_diameter(g.skeleton(), k, cap);
            if (!d) return py::none();
            return py::int_(*d);
        },
        py::arg("g"), py::arg("k"), py::arg("cap") = oracle::kDefaultStateCap);
}
