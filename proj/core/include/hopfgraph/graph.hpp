#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hopfgraph {

// Vertices are 0-based inside the library; the JSON, DOT and table formats
// print them 1-based.
using Vertex = std::uint16_t;

// Distinguishable endpoint label of an external leg (x_1, x_2, ...).
struct ExternalLabel {
  std::int32_t id = 0;

  friend auto operator<=>(const ExternalLabel&, const ExternalLabel&) = default;
};

// Labels at or above this value are reserved for the generator's temporary
// gluing legs and never appear in a returned graph.
inline constexpr std::int32_t kVirtualLabelBase = 1 << 30;

struct Species {
  std::uint8_t id = 1;

  friend auto operator<=>(const Species&, const Species&) = default;
};

// A leg that has not been placed on a vertex yet: the input of the generator.
struct ExternalLeg {
  ExternalLabel label;
  Species species;

  friend auto operator<=>(const ExternalLeg&, const ExternalLeg&) = default;
};

// x_1 .. x_n, all of species 1.
std::vector<ExternalLeg> make_legs(int n, Species species = {});

struct Leg {
  Vertex vertex = 0;
  ExternalLabel label;
  Species species;

  friend auto operator<=>(const Leg&, const Leg&) = default;
};

// Internal edge; a <= b after canonicalization, a == b is a self-loop.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;
  Species species;

  bool is_self_loop() const { return a == b; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Vertex-ordered multigraph with labelled external legs. Instances are always
// in canonical ordered form: endpoints normalized, legs and edges sorted.
class Graph {
 public:
  // A single bare vertex.
  Graph() = default;

  // canonicalize_ordered. Throws std::out_of_range for vertex indices outside
  // [0, vertex_count) and std::invalid_argument for a non-positive vertex
  // count or repeated leg labels.
  static Graph make(int vertex_count, std::vector<Leg> legs, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Leg>& legs() const { return legs_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int leg_count() const { return static_cast<int>(legs_.size()); }

  // Legs plus internal half-edges; a self-loop counts twice.
  int degree(Vertex v) const;
  std::vector<int> degrees() const;

  // Relabels vertex i as new_index[i]. new_index must be a permutation.
  Graph permuted(std::span<const Vertex> new_index) const;

  friend auto operator<=>(const Graph&, const Graph&) = default;
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 1;
  std::vector<Leg> legs_;
  std::vector<Edge> edges_;
};

struct GraphStats {
  int vertices = 0;
  int edges = 0;
  int legs = 0;
  bool connected = false;
  std::optional<int> loops;  // e - v + 1, only when connected
};

GraphStats graph_stats(const Graph& g);
bool is_connected(const Graph& g);

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept;
};

}  // namespace hopfgraph
