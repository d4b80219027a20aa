#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <tuple>
#include <vector>

#include "hopfgraph/graph_sum.hpp"

namespace hopfgraph {

struct GeneratorOptions {
  int species = 1;
  bool memoize = true;
  unsigned threads = 1;  // parallel term mapping; never changes results
};

// Weighted generation of connected graphs with l loops, v vertices and the
// given labelled legs. Each unordered graph comes out with weight equal to
// the inverse of its symmetry factor.
//
// Subresults are memoized on (l, v, n) with generic legs x_1..x_n of species
// 1; caller legs are substituted afterwards. The cache is shared by all
// callers of one Generator and is safe to use from several threads.
class Generator {
 public:
  explicit Generator(GeneratorOptions options = {});

  // Vertex-ordered sum:
  //   Omega^{0,1} = id,
  //   Omega^{l,v} = 1/(l+v-1) (sum_{i<v-1} Q_i Omega^{l,v-1} + sum_{i<v} T_i Omega^{l-1,v}).
  // Throws std::invalid_argument for l < 0, v < 1, repeated labels or labels
  // outside [1, kVirtualLabelBase).
  GraphSum omega(int loops, int vertices, std::span<const ExternalLeg> legs) const;

  // The same sum from the splitting recursion: a graph with one fewer loop
  // and two extra legs glued into an edge, plus every ordered pair of smaller
  // graphs joined by an edge. Rejects (l, v) = (0, 1).
  GraphSum omega_alt(int loops, int vertices, std::span<const ExternalLeg> legs) const;

  // forget_order(omega(...)). Computed on unordered graphs level by level:
  // both sums in the recursion run over every vertex, so forgetting the order
  // commutes with them and intermediate sums can be kept unordered.
  GraphSum enumerate_connected(int loops, int vertices, std::span<const ExternalLeg> legs) const;

  const GeneratorOptions& options() const { return options_; }
  void clear_cache();

 private:
  using Key = std::tuple<int, int, int>;
  using Cache = std::map<Key, std::shared_ptr<const GraphSum>>;

  GraphSum omega_with_legs(int loops, int vertices, std::span<const ExternalLeg> legs) const;
  std::shared_ptr<const GraphSum> generic(int loops, int vertices, int n, bool unordered) const;
  std::shared_ptr<const GraphSum> compute(int loops, int vertices, int n, bool unordered) const;

  GeneratorOptions options_;
  mutable std::mutex mutex_;
  mutable Cache ordered_cache_;
  mutable Cache unordered_cache_;
};

// Graph with one vertex carrying all legs.
Graph single_vertex(std::span<const ExternalLeg> legs);

// Replaces generic label k (1-based) by legs[k-1]. Set recanonicalize for
// unordered sums, whose canonical vertex order can depend on the labels.
GraphSum substitute_legs(const GraphSum& generic, std::span<const ExternalLeg> legs,
                         bool recanonicalize);

}  // namespace hopfgraph
