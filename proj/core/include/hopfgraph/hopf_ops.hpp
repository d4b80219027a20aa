#pragma once

#include "hopfgraph/graph_sum.hpp"

namespace hopfgraph {

struct OpOptions {
  int species = 1;       // R = sum over species 1..species
  unsigned threads = 1;  // result is independent of this
};

// T_i = 1/2 R_{i,i}: adds a self-loop at vertex i (one term per species),
// halving the weight. Throws std::out_of_range if some term has no vertex i.
GraphSum apply_T(Vertex i, const GraphSum& s, OpOptions options = {});

// Q_i = 1/2 R_{i,i+1} o Delta_i: splits vertex i into i and i+1 (later
// vertices shift up by one), distributes every leg and half-edge at i over
// the two new vertices in all 2^d ways, joins them with one edge per species
// and halves the weight. The two half-edges of a self-loop are assigned
// independently. Throws std::out_of_range if some term has no vertex i.
GraphSum apply_Q(Vertex i, const GraphSum& s, OpOptions options = {});

// Same as apply_Q on a single graph without merging, in the fixed attachment
// order (legs first, then half-edges by edge order). Exposed for tests of the
// raw term count 2^d * species.
std::vector<std::pair<Graph, Weight>> split_terms(Vertex i, const Graph& g, const Weight& w,
                                                  int species = 1);

}  // namespace hopfgraph
