#include "hopfgraph/feynman.hpp"

#include <algorithm>
#include <numeric>

#include "hopfgraph/brute_force.hpp"

namespace hopfgraph {

std::vector<Profile> vertex_profiles(const Graph& g) {
  std::vector<Profile> profiles(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& leg : g.legs()) profiles[leg.vertex].push_back(leg.species.id);
  for (const auto& e : g.edges()) {
    profiles[e.a].push_back(e.species.id);
    profiles[e.b].push_back(e.species.id);
  }
  for (auto& p : profiles) std::sort(p.begin(), p.end());
  return profiles;
}

namespace {

// Everything evaluate_graph depends on; graphs sharing it share a value.
struct Shape {
  std::vector<Profile> profiles;  // sorted
  std::vector<int> edges;         // per species
  std::vector<int> legs;          // per species

  friend auto operator<=>(const Shape&, const Shape&) = default;
};

Shape shape_of(const Graph& g, int species) {
  Shape shape;
  shape.profiles = vertex_profiles(g);
  std::sort(shape.profiles.begin(), shape.profiles.end());
  shape.edges.assign(static_cast<std::size_t>(species), 0);
  shape.legs.assign(static_cast<std::size_t>(species), 0);
  for (const auto& e : g.edges()) {
    if (e.species.id < 1 || e.species.id > species) throw ModelError("edge species outside the model");
    ++shape.edges[e.species.id - 1];
  }
  for (const auto& leg : g.legs()) {
    if (leg.species.id < 1 || leg.species.id > species) throw ModelError("leg species outside the model");
    ++shape.legs[leg.species.id - 1];
  }
  return shape;
}

Series evaluate_shape(const Shape& shape, const FieldModel& model, const VariablesPtr& ring) {
  Series value = Series::constant(ring, 1);
  std::vector<Series> propagator;
  for (int s = 1; s <= model.species; ++s) propagator.push_back(model.propagator(s).to_series(ring));
  for (const auto& profile : shape.profiles) {
    Polynomial c = model.coupling(profile);
    if (c.is_zero()) return Series(ring);
    value *= c.to_series(ring);
  }
  const bool amputated = model.legs == LegConvention::amputated;
  for (std::size_t s = 0; s < propagator.size(); ++s) {
    const auto edges = static_cast<unsigned>(shape.edges[s]);
    const auto legs = static_cast<unsigned>(shape.legs[s]);
    if (model.convention == VertexConvention::bare) {
      value *= propagator[s].pow(edges + (amputated ? 0 : legs));
    } else {
      // Every attachment of every vertex is dressed: 2 per edge, 1 per leg.
      Series inverse = propagator[s].inverse();
      value *= propagator[s].pow(2 * edges + legs);
      value *= inverse.pow(edges + (amputated ? legs : 0));
    }
  }
  return value;
}

}  // namespace

Series evaluate_graph(const Graph& g, const FieldModel& model, const VariablesPtr& ring) {
  if (!is_connected(g)) throw std::invalid_argument("evaluate_graph needs a connected graph");
  return evaluate_shape(shape_of(g, model.species), model, ring);
}

Series evaluate_sum(const GraphSum& s, const FieldModel& model, const VariablesPtr& ring) {
  std::map<Shape, Rational> weights;
  for (const auto& [g, w] : s) {
    if (!is_connected(g)) throw std::invalid_argument("evaluate_sum needs connected graphs");
    weights[shape_of(g, model.species)] += w;
  }
  Series total(ring);
  for (const auto& [shape, w] : weights) {
    if (w != 0) total += evaluate_shape(shape, model, ring) * w;
  }
  return total;
}

bool has_tadpole(const Graph& g) {
  const int v = g.vertex_count();
  const int total_legs = g.leg_count();
  std::vector<int> legs_at(static_cast<std::size_t>(v), 0);
  for (const auto& leg : g.legs()) ++legs_at[leg.vertex];
  std::vector<int> parent(static_cast<std::size_t>(v));
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto& edges = g.edges();
  for (std::size_t cut = 0; cut < edges.size(); ++cut) {
    if (edges[cut].is_self_loop()) continue;
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (k != cut) parent[find(edges[k].a)] = find(edges[k].b);
    }
    const int side = find(edges[cut].a);
    if (side == find(edges[cut].b)) continue;  // not a bridge
    int legs_on_side = 0;
    for (int x = 0; x < v; ++x) {
      if (find(x) == side) legs_on_side += legs_at[x];
    }
    if (legs_on_side == 0 || legs_on_side == total_legs) return true;
  }
  return false;
}

ConnectedFunction connected_function(const Generator& gen, const FieldModel& model, int n,
                                     const EvalOptions& options) {
  model.validate();
  if (n < 0) throw std::invalid_argument("leg count must be non-negative");
  if (options.max_order < 0) throw std::invalid_argument("max order must be non-negative");
  if (gen.options().species != model.species) {
    throw std::invalid_argument("generator and model disagree on the species count");
  }
  if (options.leg_species.id < 1 || options.leg_species.id > model.species) {
    throw std::invalid_argument("leg species outside the model");
  }
  const VariablesPtr ring = model.ring(options.max_order);
  const OnePoint one_point = options.one_point.value_or(model.one_point);

  ConnectedFunction result{Series(ring), {}, 0};
  if (one_point == OnePoint::vanish && n == 1) return result;

  if (n == 2) {
    Series line = model.propagator(options.leg_species.id).to_series(ring);
    if (model.legs == LegConvention::amputated) line = line.inverse();
    result.total += line;
    result.by_loops_vertices.emplace(std::pair{0, 0}, line);
  }

  const std::vector<int> degrees = model.coupling_degrees();
  if (degrees.empty()) return result;
  unsigned min_order = ~0u;
  for (const auto& [profile, c] : model.couplings) {
    if (c.is_zero()) continue;
    min_order = std::min(min_order, *c.order());
  }
  if (min_order == 0) {
    throw ModelError("a coupling has a constant term, so the vertex expansion does not terminate");
  }
  int total_order = 0;
  for (std::size_t i = 0; i < ring->size(); ++i) total_order += ring->order(i);
  const int max_vertices = total_order / static_cast<int>(min_order);

  const auto legs = make_legs(n, options.leg_species);
  const int dmin = degrees.front();
  const int dmax = degrees.back();
  for (int v = 1; v <= max_vertices; ++v) {
    // 2e + n = sum of vertex degrees, each within [dmin, dmax].
    const int e_low = std::max(v - 1, (v * dmin - n + 1) / 2);
    const int e_high = (v * dmax - n) / 2;
    for (int e = std::max(e_low, 0); e <= e_high; ++e) {
      if (2 * e + n < v * dmin) continue;
      if (e > options.max_edges) {
        throw ResourceGuardError("needs graphs with " + std::to_string(e) + " edges, above the limit of " +
                                 std::to_string(options.max_edges));
      }
      const int l = e - v + 1;
      GraphSum graphs = gen.enumerate_connected(l, v, legs);
      if (one_point == OnePoint::vanish) {
        GraphSum kept;
        for (const auto& [g, w] : graphs) {
          if (!has_tadpole(g)) kept.add(g, w);
        }
        graphs = std::move(kept);
      }
      result.graphs += graphs.size();
      Series part = evaluate_sum(graphs, model, ring);
      if (!part.is_zero()) {
        result.total += part;
        result.by_loops_vertices.emplace(std::pair{l, v}, std::move(part));
      }
    }
  }
  return result;
}

}  // namespace hopfgraph
