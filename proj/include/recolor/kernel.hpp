#pragma once

#include <optional>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

struct Step {
    Vertex v;
    Color c;
    bool operator==(const Step&) const = default;
};

// A recoloring sequence: ordered single-vertex color changes.  Normalized
// form: no step may assign a vertex the color it already has; replay rejects
// such steps.
using Sequence = std::vector<Step>;

// The two once-only phases of an (L1,L2)-trajectory.
struct Witness {
    Sequence phase1;
    Sequence phase2;
    const Sequence& phase(int i) const { return i == 1 ? phase1 : phase2; }
    Sequence& phase(int i) { return i == 1 ? phase1 : phase2; }
    int length() const { return static_cast<int>(phase1.size() + phase2.size()); }
};

// Triple of colorings (phi0, phi1, phi2); phi_i must be an L_i-coloring when
// tied to list assignments (L1, L2).
struct Trajectory {
    Coloring c0, c1, c2;
    const Coloring& at(int i) const { return i == 0 ? c0 : (i == 1 ? c1 : c2); }
    Coloring& at(int i) { return i == 0 ? c0 : (i == 1 ? c1 : c2); }
};

struct ApplyOptions {
    const ListAssignment* lists = nullptr;  // every step must stay in its vertex's list
    bool once_only = false;                 // each vertex recolored at most once
    const std::vector<Vertex>* late_set = nullptr;  // steps on this set come last
    int max_per_vertex = 0;                 // 0 = unlimited
    bool paranoid = false;                  // recheck properness from scratch per step
};

// Replays sigma on phi, validating every intermediate coloring.  Throws
// ImproperStep / ListViolation / OnceOnlyViolation / LatenessViolation /
// MaxRecoloringsViolation on the first offense.
Coloring apply_sequence(const Graph& g, const Coloring& phi, const Sequence& sigma,
                        const ApplyOptions& opts = {});

// Subsequence of steps on vertices inside (keep=true) or outside `set`.
Sequence restrict_sequence(const Sequence& sigma, const std::vector<Vertex>& set, bool keep);

// Inverse sequence: (phi + sigma) + reverse(sigma) == phi.
Sequence reverse_sequence(const Graph& g, const Coloring& phi_start, const Sequence& sigma);

// Observation-style reordering: given a once-only H-late witness `omega` of a
// lifting starting at phi0, and a replacement pair `sigma_h` of proper
// sequences on H realizing the same per-phase endpoint colorings on H,
// returns pi_i = omega_i^{G-V(H)} + sigma_h_i (verified proper).
Witness reorder_witness(const Graph& g, const std::vector<Vertex>& h, const Coloring& phi0,
                        const Witness& omega, const Witness& sigma_h);

// Composition across a split G = G1 (+) G2 with H inside G1.  `w1` is an
// H-late witness on G1 from phi0; `w2` is a P-late witness on G2 from phi0,
// where P = V(G1) cap V(G2); both must agree on P's per-phase endpoint
// colorings.  Returns Omega_i = w2'_i^{G2-P} + w1_i where w2' is w2 with its
// P-part reordered to match w1's.  The result is once-only, H-late, proper.
Witness combine(const Graph& g, const Graph& g1, const Graph& g2, const std::vector<Vertex>& h,
                const Coloring& phi0, const Witness& w1, const Witness& w2);

// Searches for an order in which the vertices of D = {v : from(v) != to(v)}
// can be recolored one by one (each exactly once) from `from` to `to`, with
// every intermediate coloring proper and steps on `late_set` after all
// others.  Small-instance tool (backtracking).
std::optional<Sequence> find_once_only_order(const Graph& g, const Coloring& from,
                                             const Coloring& to,
                                             const std::vector<Vertex>& late_set);

}  // namespace recolor
