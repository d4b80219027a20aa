#include "hopfgraph/hopf_ops.hpp"

#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace hopfgraph {

namespace {

const Rational kHalf(1, 2);

void check_vertex(Vertex i, const Graph& g) {
  if (i >= g.vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(i) + " out of range for graph with " +
                            std::to_string(g.vertex_count()) + " vertices");
  }
}

void check_species(int species) {
  if (species < 1 || species > 255) {
    throw std::invalid_argument("species count must be in [1, 255]");
  }
}

Vertex shifted(Vertex u, Vertex i) { return u > i ? static_cast<Vertex>(u + 1) : u; }

template <class Emit>
void for_each_split(Vertex i, const Graph& g, const Weight& w, int species, Emit emit) {
  check_vertex(i, g);

  // Attachment slots at vertex i: legs first, then half-edges in edge order.
  std::vector<std::size_t> leg_slots;
  for (std::size_t k = 0; k < g.legs().size(); ++k) {
    if (g.legs()[k].vertex == i) leg_slots.push_back(k);
  }
  struct HalfEdge {
    std::size_t edge;
    bool second;  // which endpoint of the edge
  };
  std::vector<HalfEdge> half_edges;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const Edge& e = g.edges()[k];
    if (e.a == i) half_edges.push_back({k, false});
    if (e.b == i) half_edges.push_back({k, true});
  }
  const std::size_t d = leg_slots.size() + half_edges.size();
  if (d >= 8 * sizeof(unsigned long long) - 1) {
    throw std::length_error("too many attachments at the split vertex");
  }

  const Weight weight = w * kHalf;
  const auto next = static_cast<Vertex>(i + 1);
  for (unsigned long long mask = 0; mask < (1ull << d); ++mask) {
    std::vector<Leg> legs = g.legs();
    std::vector<Edge> edges = g.edges();
    for (Leg& leg : legs) leg.vertex = shifted(leg.vertex, i);
    for (Edge& e : edges) {
      e.a = shifted(e.a, i);
      e.b = shifted(e.b, i);
    }
    std::size_t bit = 0;
    for (std::size_t k : leg_slots) {
      if (mask >> bit++ & 1) legs[k].vertex = next;
    }
    for (const HalfEdge& h : half_edges) {
      if (mask >> bit++ & 1) {
        Edge& e = edges[h.edge];
        (h.second ? e.b : e.a) = next;
      }
    }
    for (int s = 1; s <= species; ++s) {
      std::vector<Edge> with_bridge = edges;
      with_bridge.push_back({i, next, Species{static_cast<std::uint8_t>(s)}});
      emit(Graph::make(g.vertex_count() + 1, legs, std::move(with_bridge)), weight);
    }
  }
}

}  // namespace

GraphSum apply_T(Vertex i, const GraphSum& s, OpOptions options) {
  check_species(options.species);
  return detail::map_terms(s, options.threads, [&](const Graph& g, const Weight& w, GraphSum& out) {
    check_vertex(i, g);
    const Weight weight = w * kHalf;
    for (int sp = 1; sp <= options.species; ++sp) {
      std::vector<Edge> edges = g.edges();
      edges.push_back({i, i, Species{static_cast<std::uint8_t>(sp)}});
      out.add(Graph::make(g.vertex_count(), g.legs(), std::move(edges)), weight);
    }
  });
}

GraphSum apply_Q(Vertex i, const GraphSum& s, OpOptions options) {
  check_species(options.species);
  return detail::map_terms(s, options.threads, [&](const Graph& g, const Weight& w, GraphSum& out) {
    for_each_split(i, g, w, options.species,
                   [&out](Graph&& term, const Weight& tw) { out.add(std::move(term), tw); });
  });
}

std::vector<std::pair<Graph, Weight>> split_terms(Vertex i, const Graph& g, const Weight& w,
                                                  int species) {
  check_species(species);
  std::vector<std::pair<Graph, Weight>> out;
  for_each_split(i, g, w, species,
                 [&out](Graph&& term, const Weight& tw) { out.emplace_back(std::move(term), tw); });
  return out;
}

}  // namespace hopfgraph
