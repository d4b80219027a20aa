#pragma once

#include <vector>

#include "hopfgraph/graph.hpp"

namespace hopfgraph {

// Isomorphism-invariant vertex colours from iterated neighbourhood refinement.
// Equivariant: colours(g.permuted(p))[p[i]] == colours(g)[i]. Colour 0 is the
// smallest class.
std::vector<int> vertex_colors(const Graph& g);

// Canonical representative of the unordered graph. Graphs are ordered by the
// key (colour sequence, legs, edges); the result is the least key over all
// vertex relabelings. External labels stay attached to their vertex.
//
// The colour sequence of the minimum is necessarily sorted, so the search
// only visits relabelings that keep colour classes contiguous and in colour
// order, exhausting permutations inside each class.
Graph canonical_unordered(const Graph& g);

}  // namespace hopfgraph
