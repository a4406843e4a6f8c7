#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "recolor/scene.hpp"

namespace recolor {
namespace oracle {

inline constexpr int64_t kDefaultStateCap = 2'000'000;

// Explicit reconfiguration graph R_k(G): all proper k-colorings, adjacent
// when they differ at exactly one vertex.  States are canonically encoded as
// radix-k integers.
struct ReconfigGraph {
    int k = 0;
    std::vector<Vertex> verts;          // present vertices, ascending
    std::vector<Coloring> states;       // proper k-colorings
    std::vector<std::vector<int>> moves;  // adjacency between state indices

    int state_index(const Coloring& phi) const;  // -1 if not found
};

// Enumerates R_k(G); StateSpaceTooLarge if more than `cap` states exist.
ReconfigGraph build_reconfig_graph(const Graph& g, int k, int64_t cap = kDefaultStateCap);

// Exact BFS distance between alpha and beta in R_k(G).
// Throws StateSpaceTooLarge / Unreachable.
int reconfig_distance(const Graph& g, int k, const Coloring& alpha, const Coloring& beta,
                      int64_t cap = kDefaultStateCap);

// Max eccentricity over all states; Unreachable (as an exception) would be
// wrong here, so disconnection is reported via the optional: std::nullopt
// means R_k(G) is disconnected.
std::optional<int> reconfig_diameter(const Graph& g, int k, int64_t cap = kDefaultStateCap);

// Deterministic (lexicographic) exact list-coloring backtracking.
std::optional<Coloring> exact_list_coloring(const Graph& g, const ListAssignment& l);

struct BruteResult {
    bool exists = false;
    Trajectory trajectory;  // populated when exists
    Witness witness;
};

// Exhaustive search over (phi1, phi2) pairs and once-only H-late orderings;
// independent of the scene solver.
BruteResult brute_scene_trajectory(const Scene& s, int64_t cap = kDefaultStateCap);

}  // namespace oracle
}  // namespace recolor
