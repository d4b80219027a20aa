#pragma once

#include "hopfgraph/graph.hpp"
#include "hopfgraph/rational.hpp"

namespace hopfgraph {

// Order of the automorphism group acting on vertices and internal half-edges,
// with every external leg fixed pointwise and edge species preserved.
//
// Enumerates the vertex permutations that preserve edge multiplicities per
// species (and fix every vertex carrying a leg), then multiplies by the
// half-edge relabelings compatible with any one of them: k! for each class
// of k parallel edges and an extra 2^k for k self-loops at one vertex.
//
// Throws std::invalid_argument for a disconnected graph. The result does not
// depend on the vertex order of g.
BigInt symmetry_factor(const Graph& g);

}  // namespace hopfgraph
