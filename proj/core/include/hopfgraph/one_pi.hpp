#pragma once

#include <map>
#include <optional>
#include <span>

#include "hopfgraph/generator.hpp"
#include "hopfgraph/series.hpp"

namespace hopfgraph {

// standard: tau with G_F on internal edges (edge factor 1/G_F).
// modified: tau-hat with vanishing 2-point entry and the full connected
// 2-point function on edges (edge factor 1/G_c^(2)).
enum class OnePIMode { standard, modified };

// Single-species table of 1PI values by leg count. Entries for 0 and 1 legs
// are zero by convention; so is the 2-leg entry in the modified mode.
class OnePITable {
 public:
  explicit OnePITable(VariablesPtr ring);

  void set(int n, Series value);
  // Zero for n = 0, 1 when unset; TruncationError for any other unset entry.
  Series at(int n) const;
  bool contains(int n) const { return entries_.count(n) > 0; }
  const VariablesPtr& ring() const { return ring_; }
  const std::map<int, Series>& entries() const { return entries_; }

  // Throws std::invalid_argument when a zero convention is violated.
  void validate(OnePIMode mode) const;

 private:
  VariablesPtr ring_;
  std::map<int, Series> entries_;
};

// sigma^v = tau^{(x)v} o Omega^{0,v}: sum over the trees of Omega^{0,v} on the
// legs of weight * prod_vertices tau(degree) * (1/two_point)^(v-1).
Series connected_from_1pi(const Generator& gen, int vertices, std::span<const ExternalLeg> legs,
                          const OnePITable& tau, const Series& two_point,
                          OnePIMode mode = OnePIMode::standard);

// The same value from sigma^1 = tau and
//   sigma^v = 1/(v-1) sum_{i=1}^{v-1} sum_{(A,B)} 1/2 sigma^i(A+u) (1/two_point) sigma^{v-i}(B+w)
// over ordered bipartitions (A, B) of the legs.
Series connected_from_1pi_rec(int vertices, std::span<const ExternalLeg> legs, const OnePITable& tau,
                              const Series& two_point, OnePIMode mode = OnePIMode::standard);

// Largest v for which a tree with n legs and every vertex of valence >= 3
// exists: the sum of valences 2(v-1) + n must reach 3v, so v <= n - 2.
// Zero when no such tree exists.
int modified_max_vertices(int n);

struct TreeExpansion {
  Series total;
  std::map<int, Series> by_vertices;  // includes 0: the two-point line for n = 2
  int max_vertices = 0;               // largest v summed
};

// sigma on x_1..x_n: two_point for n = 2 plus sum_v sigma^v. The modified mode
// stops at modified_max_vertices(n) on its own. The standard mode needs
// max_vertices unless every entry that can occur has a zero constant term,
// in which case the truncation bounds v.
TreeExpansion connected_from_1pi_sum(const Generator& gen, int n, const OnePITable& tau,
                                     const Series& two_point, OnePIMode mode = OnePIMode::standard,
                                     std::optional<int> max_vertices = std::nullopt);

}  // namespace hopfgraph
