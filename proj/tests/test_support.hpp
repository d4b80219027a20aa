#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "hopfgraph/canonical.hpp"
#include "hopfgraph/graph.hpp"

namespace hopfgraph::testing {

// Random connected multigraph: a random spanning tree plus extra random
// edges (self-loops allowed), legs x_1..x_n on random vertices.
inline Graph random_connected_graph(std::mt19937& rng, int v, int extra_edges, int n,
                                    int species = 1) {
  auto pick = [&rng](int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(rng); };
  auto sp = [&] { return Species{static_cast<std::uint8_t>(1 + pick(species))}; };
  std::vector<Edge> edges;
  for (int i = 1; i < v; ++i) {
    edges.push_back({static_cast<Vertex>(pick(i)), static_cast<Vertex>(i), sp()});
  }
  for (int k = 0; k < extra_edges; ++k) {
    edges.push_back({static_cast<Vertex>(pick(v)), static_cast<Vertex>(pick(v)), sp()});
  }
  std::vector<Leg> legs;
  for (int k = 1; k <= n; ++k) legs.push_back({static_cast<Vertex>(pick(v)), ExternalLabel{k}, {}});
  std::vector<Vertex> shuffle(static_cast<std::size_t>(v));
  std::iota(shuffle.begin(), shuffle.end(), Vertex{0});
  std::shuffle(shuffle.begin(), shuffle.end(), rng);
  return Graph::make(v, legs, edges).permuted(shuffle);
}

inline std::vector<Vertex> random_permutation(std::mt19937& rng, int v) {
  std::vector<Vertex> p(static_cast<std::size_t>(v));
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Reference canonical form: minimum of (colour sequence, graph) over all v!
// relabelings, no pruning.
inline Graph exhaustive_canonical(const Graph& g) {
  std::vector<Vertex> p(static_cast<std::size_t>(g.vertex_count()));
  std::iota(p.begin(), p.end(), Vertex{0});
  bool have = false;
  std::vector<int> best_colors;
  Graph best;
  do {
    Graph candidate = g.permuted(p);
    std::vector<int> colors = vertex_colors(candidate);
    if (!have || std::tie(colors, candidate) < std::tie(best_colors, best)) {
      best_colors = std::move(colors);
      best = std::move(candidate);
      have = true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// |Aut| by permuting internal half-edges directly: counts permutations of
// the 2e half-edges that map the half-edges of each vertex onto those of a
// single vertex (bijectively), keep every leg-carrying vertex fixed, and map
// edges onto edges of the same species. Factorial cost; tiny graphs only.
inline long half_edge_automorphisms(const Graph& g) {
  struct HalfEdge {
    Vertex vertex;
    int edge;
  };
  std::vector<HalfEdge> half;
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[static_cast<std::size_t>(k)];
    half.push_back({e.a, k});
    half.push_back({e.b, k});
  }
  std::vector<bool> pinned(static_cast<std::size_t>(g.vertex_count()), false);
  for (const Leg& leg : g.legs()) pinned[leg.vertex] = true;

  std::vector<int> perm(half.size());
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    std::map<Vertex, Vertex> vmap;
    bool ok = true;
    for (std::size_t h = 0; h < half.size() && ok; ++h) {
      Vertex from = half[h].vertex;
      Vertex to = half[static_cast<std::size_t>(perm[h])].vertex;
      auto [it, inserted] = vmap.emplace(from, to);
      if (!inserted && it->second != to) ok = false;
    }
    if (!ok) continue;
    std::vector<bool> hit(static_cast<std::size_t>(g.vertex_count()), false);
    for (auto [from, to] : vmap) {
      if (hit[to]) ok = false;
      hit[to] = true;
      if (pinned[from] && from != to) ok = false;
    }
    if (!ok) continue;
    // Vertices without half-edges (only a bare single vertex) map to themselves.
    for (std::size_t h = 0; h < half.size() && ok; h += 2) {
      int image_a = perm[h];
      int image_b = perm[h + 1];
      if (half[static_cast<std::size_t>(image_a)].edge != half[static_cast<std::size_t>(image_b)].edge) ok = false;
      const Edge& src = g.edges()[static_cast<std::size_t>(half[h].edge)];
      const Edge& dst = g.edges()[static_cast<std::size_t>(half[static_cast<std::size_t>(image_a)].edge)];
      if (src.species != dst.species) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace hopfgraph::testing
