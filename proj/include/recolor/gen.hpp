#pragma once

#include <cstdint>
#include <string>

#include "recolor/plane_graph.hpp"

namespace recolor {
namespace gen {

// All generators are deterministic per seed and emit verified embeddings.

PlaneGraph grid(int rows, int cols);
PlaneGraph cycle(int n);
PlaneGraph wheel(int rim);  // rim >= 3; hub drawn inside, rim is the outer cycle

// Random stacked triangulation (repeatedly inserts a vertex into a random
// inner triangular face), n >= 3 vertices.
PlaneGraph stacked_triangulation(int n, uint64_t seed);

// Connected spanning subgraph of a stacked triangulation obtained by deleting
// non-boundary edges at random while keeping the graph connected.
PlaneGraph random_planar(int n, double keep_fraction, uint64_t seed);

// Triangle-free: grid minus random internal edges, kept connected.
PlaneGraph random_grid_subgraph(int rows, int cols, double keep_fraction, uint64_t seed);

// P_{d,n}: a path on n-d+1 vertices plus a clique of d-1 vertices adjacent to
// every path vertex.  Only d in {2,3} admits the plane embedding this module
// emits; other d raises BadParams.
PlaneGraph p_dn(int d, int n);

// Random proper coloring with colors {1..k} (random greedy with restarts).
Coloring random_coloring(const Graph& g, int k, uint64_t seed);

// Random d-degenerate graph: each vertex joins <= d random earlier vertices.
Graph random_degenerate(int n, int d, uint64_t seed);

}  // namespace gen
}  // namespace recolor
