#include "hopfgraph/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace hopfgraph {

namespace {

using Signature = std::vector<std::int64_t>;

std::vector<int> rank_signatures(const std::vector<Signature>& sigs) {
  std::vector<Signature> unique = sigs;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  std::vector<int> colors(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    colors[i] = static_cast<int>(
        std::lower_bound(unique.begin(), unique.end(), sigs[i]) - unique.begin());
  }
  return colors;
}

int count_classes(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

}  // namespace

std::vector<int> vertex_colors(const Graph& g) {
  const auto v = static_cast<std::size_t>(g.vertex_count());
  std::vector<Signature> sigs(v);
  const std::vector<int> deg = g.degrees();
  for (std::size_t i = 0; i < v; ++i) sigs[i].push_back(-deg[i]);  // busier vertices first
  // Legs are sorted by vertex, so each vertex sees its legs in label order.
  for (const Leg& leg : g.legs()) {
    sigs[leg.vertex].push_back(leg.label.id);
    sigs[leg.vertex].push_back(leg.species.id);
  }
  for (std::size_t i = 0; i < v; ++i) sigs[i].push_back(-1);
  for (const Edge& e : g.edges()) {
    if (e.is_self_loop()) sigs[e.a].push_back(e.species.id);
  }
  std::vector<int> colors = rank_signatures(sigs);

  int classes = count_classes(colors);
  while (classes < static_cast<int>(v)) {
    std::vector<Signature> next(v);
    for (std::size_t i = 0; i < v; ++i) next[i].push_back(colors[i]);
    std::vector<std::vector<std::int64_t>> neighbours(v);
    for (const Edge& e : g.edges()) {
      if (e.is_self_loop()) continue;
      neighbours[e.a].push_back(std::int64_t{colors[e.b]} * 256 + e.species.id);
      neighbours[e.b].push_back(std::int64_t{colors[e.a]} * 256 + e.species.id);
    }
    for (std::size_t i = 0; i < v; ++i) {
      std::sort(neighbours[i].begin(), neighbours[i].end());
      next[i].insert(next[i].end(), neighbours[i].begin(), neighbours[i].end());
    }
    std::vector<int> refined = rank_signatures(next);
    int refined_classes = count_classes(refined);
    if (refined_classes == classes) break;
    colors = std::move(refined);
    classes = refined_classes;
  }
  return colors;
}

Graph canonical_unordered(const Graph& g) {
  const std::vector<int> colors = vertex_colors(g);
  const int classes = count_classes(colors);

  std::vector<std::vector<Vertex>> cells(static_cast<std::size_t>(classes));
  for (std::size_t i = 0; i < colors.size(); ++i) {
    cells[static_cast<std::size_t>(colors[i])].push_back(static_cast<Vertex>(i));
  }

  std::vector<Vertex> new_index(colors.size());
  auto assign = [&]() {
    Vertex pos = 0;
    for (const auto& cell : cells) {
      for (Vertex u : cell) new_index[u] = pos++;
    }
  };

  assign();
  Graph best = g.permuted(new_index);
  if (classes == g.vertex_count()) return best;

  // Odometer over the permutations of every cell; each cell starts sorted so
  // next_permutation visits all of its orderings before wrapping around.
  while (true) {
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      if (std::next_permutation(cells[c].begin(), cells[c].end())) break;
    }
    if (c == cells.size()) break;
    assign();
    Graph candidate = g.permuted(new_index);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace hopfgraph
