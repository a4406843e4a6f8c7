#pragma once

#include <string>
#include <vector>

#include "recolor/kernel.hpp"
#include "recolor/plane_graph.hpp"

namespace recolor {

// The recursive problem unit: lift the prescribed boundary trajectory delta
// (witnessed by beta) from H to all of G.
struct Scene {
    PlaneGraph g;
    std::vector<Vertex> h;  // boundary segment, in outer-walk order (may be empty
                            // or the entire outer cycle)
    ListAssignment l1, l2;
    Coloring phi0;
    Trajectory delta;  // colorings on V(H) (entries elsewhere ignored)
    Witness beta;      // once-only witness of delta on H

    // Structural well-formedness: phi0 proper, H a boundary segment, delta a
    // trajectory on H starting with phi0|H, beta replays it.  Throws on
    // violation.
    void validate_structure() const;
};

struct ValidityReport {
    bool valid = true;
    struct Violation {
        std::string tag;  // Ga, Gb, Gc, Ta, Tb, Tc, size-of-H, triangle
        std::vector<Vertex> vertices;
        std::string detail;
    };
    std::vector<Violation> violated;
};

// Checks the scene conditions (Ga)-(Gc) (general) or (Ta)-(Tc) plus
// triangle-freeness (triangle_free mode).  Purely a report; never throws.
ValidityReport check_valid(const Scene& s, Mode mode);

struct SolveResult {
    Trajectory trajectory;  // colorings on all of V(G)
    Witness witness;        // once-only, H-late, H-part replaying beta exactly
};

// Constructive form of the existence guarantee that every (T-)valid scene
// has a trajectory.  Precondition: check_valid(s, mode).valid.  A failure on a valid
// scene is an implementation bug and raises InternalError carrying a dump of
// the failing sub-scene.
SolveResult solve(const Scene& s, Mode mode);

// Lifts delta to the outer cycle K with the second phase touching only H
// (psi2 = psi1 off H).  Requires the outer face to be an induced cycle of
// length >= 5 (general) / >= 6 (triangle-free) and the scene to be valid.
// The returned trajectory and witness concern V(K) only.
SolveResult stable_outer(const Scene& s, Mode mode);

// Debug dump (JSON) for InternalError triage and bug-report fixtures.
std::string dump_scene(const Scene& s);
Scene parse_scene_dump(const std::string& json_text);

}  // namespace recolor
