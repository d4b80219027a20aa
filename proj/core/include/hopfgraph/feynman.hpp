#pragma once

#include <map>
#include <optional>
#include <utility>

#include "hopfgraph/generator.hpp"
#include "hopfgraph/graph_sum.hpp"
#include "hopfgraph/model.hpp"
#include "hopfgraph/series.hpp"

namespace hopfgraph {

// Species of every attachment at each vertex (legs, then half-edges; a
// self-loop contributes twice), sorted.
std::vector<Profile> vertex_profiles(const Graph& g);

// Feynman value of one graph, weight not included. Bare convention:
//   prod_edges P(s) * prod_vertices coupling(profile) * prod_legs P(s) [unamputated].
// Dressed convention: edges 1/P, each vertex its coupling times P on every
// attachment, and legs 1/P when amputated. Both give the same number.
// Throws ModelError for an undeclared profile when the model asks for it.
Series evaluate_graph(const Graph& g, const FieldModel& model, const VariablesPtr& ring);

// sum_terms weight * evaluate_graph.
Series evaluate_sum(const GraphSum& s, const FieldModel& model, const VariablesPtr& ring);

// True when removing some internal edge leaves a component without external
// legs: the graph contains a piece that would feed a 1-point function.
bool has_tadpole(const Graph& g);

struct EvalOptions {
  int max_order = 4;   // truncation order of model variables without an explicit order
  int max_edges = 10;  // ResourceGuardError beyond this
  Species leg_species{};
  std::optional<OnePoint> one_point;  // overrides the model's flag
};

struct ConnectedFunction {
  Series total;
  // Nonzero contributions by (loops, vertices); (0, 0) is the bare propagator.
  std::map<std::pair<int, int>, Series> by_loops_vertices;
  std::size_t graphs = 0;  // graphs evaluated
};

// Connected n-point function sum_{l,v} sigma^{l,v} on legs x_1..x_n, plus the
// bare propagator for n = 2, truncated at the model ring's orders. Only loop
// numbers compatible with the declared coupling degrees are generated; the
// vertex count is bounded by the truncation, since every coupling must
// vanish at zero coupling. With the vanishing 1-point convention, n = 1 gives
// zero and graphs with tadpoles are dropped.
ConnectedFunction connected_function(const Generator& gen, const FieldModel& model, int n,
                                     const EvalOptions& options = {});

}  // namespace hopfgraph
