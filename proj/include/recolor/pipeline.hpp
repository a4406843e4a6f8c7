#pragma once

#include <functional>
#include <vector>

#include "recolor/scene.hpp"

namespace recolor {

struct EliminationResult {
    Sequence sequence;  // flattened (phase1 + phase2); <= 2 steps per vertex
    Coloring final;     // final(v) != f(v) for every v
};

// Recolors phi (an L-coloring) so the result avoids f(v) at every vertex,
// recoloring each vertex at most twice.  Requires |L(v)| >= 10 (general) or
// |L(v)| >= 7 with G triangle-free.
EliminationResult eliminate_color(const PlaneGraph& g, const ListAssignment& l,
                                  const Coloring& phi, const std::vector<Color>& f, Mode mode);

// An independent set I with degeneracy(G - I) <= target_d.  For a
// d-degenerate G and target_d = d-1 this is constructive (greedy along a
// degeneracy order); for planar G and target_d = 3 it falls back to
// randomized restarts and, at small n, exact search, raising SearchExhausted
// beyond the limits.
std::vector<Vertex> independent_set_degenerate(const Graph& g, int target_d,
                                               int restarts = 2000, int exact_cap = 24);

// Recoloring walk from alpha to beta in R_c(G) for a d-degenerate G with
// c >= 2d+2.  Guaranteed length <= 2(d+1)n; the corpus is monitored for the
// (d+1)n figure.
Sequence degenerate_recolor(const Graph& g, int d, int c, const Coloring& alpha,
                            const Coloring& beta);

struct RecolorPlan {
    Sequence forward;   // alpha -> alpha' -> I to k -> core path
    Sequence backward;  // the reversed beta-side
    int total_length = 0;
    int budget = 0;  // 8n (general) / 7n (triangle-free)
    std::vector<Vertex> independent_set;
    Sequence flat() const {
        Sequence s = forward;
        s.insert(s.end(), backward.begin(), backward.end());
        return s;
    }
};

// End-to-end entry point: a verified recoloring plan from alpha to beta with
// k = 10 (general) or k = 7 (triangle-free), of length <= budget.
RecolorPlan recolor_planar(const PlaneGraph& g, const Coloring& alpha, const Coloring& beta,
                           int k, Mode mode);

using ListSolver = std::function<Coloring(const Graph&, const ListAssignment&)>;

// Degeneracy-order replay: recolors each vertex at most once so the result
// avoids color c+d+1, using `list_solver` to color the constructed lists.
Sequence degchos_recolor(const Graph& g, const Coloring& alpha, int c, int d,
                         const ListSolver& list_solver);

// Plan file format helpers (header + flat step list).
std::string serialize_plan(const RecolorPlan& plan, int n, int k, Mode mode);

}  // namespace recolor
