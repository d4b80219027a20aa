#include "hopfgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hopfgraph {

std::vector<ExternalLeg> make_legs(int n, Species species) {
  std::vector<ExternalLeg> legs;
  legs.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 1; i <= n; ++i) {
    legs.push_back({ExternalLabel{i}, species});
  }
  return legs;
}

Graph Graph::make(int vertex_count, std::vector<Leg> legs, std::vector<Edge> edges) {
  if (vertex_count < 1 || vertex_count > 0xFFFF) {
    throw std::invalid_argument("vertex count must be in [1, 65535], got " +
                                std::to_string(vertex_count));
  }
  auto check = [vertex_count](Vertex v) {
    if (v >= vertex_count) {
      throw std::out_of_range("vertex index " + std::to_string(v) +
                              " out of range for " + std::to_string(vertex_count) +
                              " vertices");
    }
  };
  for (const Leg& leg : legs) check(leg.vertex);
  for (Edge& e : edges) {
    check(e.a);
    check(e.b);
    if (e.b < e.a) std::swap(e.a, e.b);
  }
  std::sort(legs.begin(), legs.end());
  std::sort(edges.begin(), edges.end());

  std::vector<ExternalLabel> labels;
  labels.reserve(legs.size());
  for (const Leg& leg : legs) labels.push_back(leg.label);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw std::invalid_argument("external leg labels must be pairwise distinct");
  }

  Graph g;
  g.vertex_count_ = vertex_count;
  g.legs_ = std::move(legs);
  g.edges_ = std::move(edges);
  return g;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (const Leg& leg : legs_) d += leg.vertex == v;
  for (const Edge& e : edges_) d += (e.a == v) + (e.b == v);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(vertex_count_), 0);
  for (const Leg& leg : legs_) ++d[leg.vertex];
  for (const Edge& e : edges_) {
    ++d[e.a];
    ++d[e.b];
  }
  return d;
}

Graph Graph::permuted(std::span<const Vertex> new_index) const {
  Graph g;
  g.vertex_count_ = vertex_count_;
  g.legs_ = legs_;
  g.edges_ = edges_;
  for (Leg& leg : g.legs_) leg.vertex = new_index[leg.vertex];
  for (Edge& e : g.edges_) {
    e.a = new_index[e.a];
    e.b = new_index[e.b];
    if (e.b < e.a) std::swap(e.a, e.b);
  }
  std::sort(g.legs_.begin(), g.legs_.end());
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  int components = g.vertex_count();
  for (const Edge& e : g.edges()) {
    int ra = find(parent, e.a);
    int rb = find(parent, e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  s.legs = g.leg_count();
  s.connected = is_connected(g);
  if (s.connected) s.loops = s.edges - s.vertices + 1;
  return s;
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.vertex_count()) * 0x9E3779B97F4A7C15ull;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  };
  for (const Leg& leg : g.legs()) {
    mix((static_cast<std::size_t>(leg.vertex) << 40) ^
        (static_cast<std::size_t>(static_cast<std::uint32_t>(leg.label.id)) << 8) ^
        leg.species.id);
  }
  for (const Edge& e : g.edges()) {
    mix((static_cast<std::size_t>(e.a) << 32) ^ (static_cast<std::size_t>(e.b) << 8) ^
        e.species.id);
  }
  return h;
}

}  // namespace hopfgraph
