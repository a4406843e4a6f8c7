#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

enum class Mode { General, TriangleFree };

// Plane graph: a simple graph with a combinatorial embedding (clockwise
// rotation at each vertex) and a designated outer face walk.  The embedding
// is certified at construction by face tracing and Euler's formula; it is
// never computed from scratch (embeddings are inputs).
//
// Face tracing convention: the dart following (u,v) is (v,w) where w is the
// clockwise successor of u in the rotation at v.
class PlaneGraph : public Graph {
public:
    PlaneGraph() = default;

    // `rot` gives the clockwise neighbor order per vertex (full universe);
    // `outer` is a closed walk (vertex sequence) bounding the outer face.
    // Throws EmbeddingInvalid / NotSimple on a broken description.
    static PlaneGraph from_rotations(std::vector<std::vector<Vertex>> rot,
                                     std::vector<Vertex> outer);

    // Line-oriented text format:
    //   n <count>
    //   rot <v>: <u1> <u2> ...
    //   outer: <v1> <v2> ... <vk>
    // '#' starts a comment.
    static PlaneGraph parse(std::istream& in);
    static PlaneGraph parse(const std::string& text);
    std::string serialize() const;

    const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
    const std::vector<Vertex>& outer_walk() const { return outer_; }

    bool on_outer(Vertex v) const { return has(v) && outer_mark_[v]; }
    bool internal(Vertex v) const { return has(v) && !outer_mark_[v]; }

    // Outer cycle in boundary order; NotACycle if the walk repeats a vertex.
    std::vector<Vertex> outer_cycle() const;

    // All faces as vertex walks (one entry per traced dart cycle; the outer
    // walk is among them).
    std::vector<std::vector<Vertex>> faces() const;

    Graph skeleton() const { return static_cast<const Graph&>(*this); }

    // Induced plane subgraph.  The outer face of the child is the traced face
    // containing a surviving dart of the parent's outer walk; when none
    // survives, `fallback_face` (a closed vertex walk, either orientation) is
    // looked up among the traced faces instead.  With `any_face_ok` the first
    // traced face is used as a last resort (for interior pieces).
    PlaneGraph induced_plane(const std::vector<Vertex>& keep,
                             const std::vector<Vertex>& fallback_face = {},
                             bool any_face_ok = false) const;

    PlaneGraph without_vertex(Vertex v) const;
    PlaneGraph without_edge(Vertex u, Vertex v) const;

    // Connected components as plane graphs.  A component holding darts of the
    // parent's outer walk keeps that face as outer; any other component gets
    // its first traced face (all such components arise from interior regions,
    // where the choice is immaterial for the scene conditions).
    std::vector<PlaneGraph> plane_components() const;

    // Chords of the outer cycle (pairs non-consecutive on the cycle joined by
    // an edge), each pair ordered (min,max).
    std::vector<std::pair<Vertex, Vertex>> outer_chords() const;

    // Vertices strictly inside the disk bounded by `cycle` (the side not
    // containing the outer face).  `cycle` must be a cycle in the graph.
    std::vector<Vertex> disk_interior(const std::vector<Vertex>& cycle) const;

private:
    void trace_and_validate();

    std::vector<std::vector<Vertex>> rot_;
    std::vector<Vertex> outer_;
    std::vector<char> outer_mark_;
};

struct Separator {
    enum class Kind { CutVertex, Chord, Path, Cycle };
    Kind kind;
    // CutVertex: {v}; Chord: {u,v}; Path: {v1,x,v2} with x internal;
    // Cycle: the cycle's vertices in order.
    std::vector<Vertex> verts;
};

// Splits G at the separator into (G1, G2) with G1 cup G2 = G and
// G1 cap G2 = separator.  `side_hint` designates a vertex that must end up
// in G1 (ignored for Kind::Cycle, where G2 is always the closed disk bounded
// by the cycle).  Throws NotSeparating / SeparatorNotInduced.
std::pair<PlaneGraph, PlaneGraph> split(const PlaneGraph& g, const Separator& sep,
                                        Vertex side_hint = -1);

// The structural reduction applicable to (G, H), in the fixed priority order
// the scene solver follows.  MainStep is the default.
struct ReductionSite {
    enum class Kind {
        CutVertex,        // v
        OuterChord,       // chord (u,v); `inner_chord` set when it attaches to
                          // a non-end vertex of H and splits H
        NonFacialCycle,   // cycle (length 3 general, <=5 triangle-free)
        LowDegreeVertex,  // v outside H with degree <= 2 (triangle-free only)
        SmallH,           // extend H (path too short) or delete an H-edge
                          // (`h_is_cycle`)
        InternalFan,      // internal v with fan ends (u1, u2) on the outer cycle
        ShortOuterFace,   // outer cycle of length 4 (general) / <=5 (t-free)
        MainStep
    };
    Kind kind = Kind::MainStep;
    Vertex v = -1;
    Vertex u = -1;
    Vertex fan1 = -1, fan2 = -1;
    std::vector<Vertex> cycle;
    bool inner_chord = false;
    bool h_is_cycle = false;
};

ReductionSite find_reduction_site(const PlaneGraph& g, const std::vector<Vertex>& h, Mode mode);

// True if `h` is consecutive along the outer walk of g (in order).
bool is_boundary_segment(const PlaneGraph& g, const std::vector<Vertex>& h);

// True if the vertices of `h` induce the entire outer cycle.
bool segment_is_outer_cycle(const PlaneGraph& g, const std::vector<Vertex>& h);

}  // namespace recolor
