#include "hopfgraph/brute_force.hpp"

#include <string>
#include <vector>

#include "hopfgraph/canonical.hpp"

namespace hopfgraph {

std::set<Graph> brute_force_enumerate(int loops, int vertices, int n, int species,
                                      int max_edges) {
  if (loops < 0 || vertices < 1 || n < 0 || species < 1 || species > 255) {
    throw std::invalid_argument("invalid brute-force instance");
  }
  const int e = loops + vertices - 1;
  if (e > max_edges) {
    throw ResourceGuardError("brute-force enumeration limited to " + std::to_string(max_edges) +
                             " edges, requested " + std::to_string(e));
  }

  std::vector<Edge> slots;
  for (int i = 0; i < vertices; ++i) {
    for (int j = i; j < vertices; ++j) {
      for (int s = 1; s <= species; ++s) {
        slots.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j),
                         Species{static_cast<std::uint8_t>(s)}});
      }
    }
  }

  std::set<Graph> found;
  std::vector<Edge> chosen;
  std::vector<Leg> legs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) legs[static_cast<std::size_t>(k)].label = ExternalLabel{k + 1};

  auto place_legs = [&](const Graph& skeleton) {
    std::vector<int> host(static_cast<std::size_t>(n), 0);
    while (true) {
      for (int k = 0; k < n; ++k) {
        legs[static_cast<std::size_t>(k)].vertex = static_cast<Vertex>(host[static_cast<std::size_t>(k)]);
      }
      found.insert(canonical_unordered(Graph::make(vertices, legs, skeleton.edges())));
      int k = 0;
      for (; k < n; ++k) {
        auto& h = host[static_cast<std::size_t>(k)];
        if (++h < vertices) break;
        h = 0;
      }
      if (k == n) break;
    }
  };

  // Multisets of e slots as non-decreasing index sequences.
  auto choose = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      Graph skeleton = Graph::make(vertices, {}, chosen);
      if (is_connected(skeleton)) place_legs(skeleton);
      return;
    }
    for (std::size_t k = start; k < slots.size(); ++k) {
      chosen.push_back(slots[k]);
      self(self, k, remaining - 1);
      chosen.pop_back();
    }
  };
  choose(choose, 0, e);
  return found;
}

}  // namespace hopfgraph
