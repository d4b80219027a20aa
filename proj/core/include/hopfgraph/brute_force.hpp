#pragma once

#include <set>
#include <stdexcept>

#include "hopfgraph/graph.hpp"

namespace hopfgraph {

// Raised when an instance exceeds a configured size limit.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every connected graph with l loops, v vertices and legs x_1..x_n (species
// 1), edges of species 1..species, up to isomorphism, as canonical unordered
// graphs. Built from all edge multisets over vertex pairs i <= j and all leg
// placements; no weights. Throws ResourceGuardError when l + v - 1 > max_edges.
std::set<Graph> brute_force_enumerate(int loops, int vertices, int n, int species = 1,
                                      int max_edges = 7);

}  // namespace hopfgraph
