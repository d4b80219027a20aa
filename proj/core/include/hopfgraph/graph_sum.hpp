#pragma once

#include <map>

#include "hopfgraph/graph.hpp"
#include "hopfgraph/rational.hpp"

namespace hopfgraph {

// Finite linear combination of canonical graphs. Terms merge by graph
// equality; zero weights are pruned. Iteration order is the graph order, so
// every traversal is deterministic.
class GraphSum {
 public:
  using Map = std::map<Graph, Weight>;

  GraphSum() = default;
  GraphSum(const Graph& g, const Weight& w) { add(g, w); }

  void add(const Graph& g, const Weight& w);
  void add(Graph&& g, const Weight& w);

  GraphSum& operator+=(const GraphSum& other);
  GraphSum& operator*=(const Rational& factor);

  const Map& terms() const { return terms_; }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Zero when the graph is absent.
  Weight weight(const Graph& g) const;
  Weight total_weight() const;

  friend bool operator==(const GraphSum&, const GraphSum&) = default;

 private:
  Map terms_;
};

GraphSum operator+(GraphSum lhs, const GraphSum& rhs);
GraphSum operator*(GraphSum lhs, const Rational& factor);

// Replaces every term by its canonical unordered form and merges collisions.
// threads > 1 splits the work; the result does not depend on it.
GraphSum forget_order(const GraphSum& s, unsigned threads = 1);

}  // namespace hopfgraph
