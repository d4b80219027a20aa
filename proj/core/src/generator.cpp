#include "hopfgraph/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hopfgraph/canonical.hpp"
#include "hopfgraph/hopf_ops.hpp"
#include "parallel.hpp"

namespace hopfgraph {

namespace {

const Rational kHalf(1, 2);

void check_shape(int loops, int vertices) {
  if (loops < 0) throw std::invalid_argument("loop number must be >= 0");
  if (vertices < 1) throw std::invalid_argument("vertex number must be >= 1");
}

void check_user_legs(std::span<const ExternalLeg> legs, int species) {
  std::vector<ExternalLabel> labels;
  for (const ExternalLeg& leg : legs) {
    if (leg.label.id < 1 || leg.label.id >= kVirtualLabelBase) {
      throw std::invalid_argument("leg label " + std::to_string(leg.label.id) +
                                  " outside the user label range");
    }
    if (leg.species.id < 1 || leg.species.id > species) {
      throw std::invalid_argument("leg species " + std::to_string(leg.species.id) +
                                  " outside the declared species range");
    }
    labels.push_back(leg.label);
  }
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw std::invalid_argument("leg labels must be pairwise distinct");
  }
}

bool is_generic(std::span<const ExternalLeg> legs) {
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (legs[k].label.id != static_cast<int>(k + 1) || legs[k].species.id != 1) return false;
  }
  return true;
}

// Removes legs u and w and joins their host vertices with an edge.
Graph glue(int vertex_count, std::vector<Leg> legs, std::vector<Edge> edges, ExternalLabel u,
           ExternalLabel w, Species species) {
  Vertex hu = 0;
  Vertex hw = 0;
  int found = 0;
  std::erase_if(legs, [&](const Leg& leg) {
    if (leg.label == u) {
      hu = leg.vertex;
      ++found;
      return true;
    }
    if (leg.label == w) {
      hw = leg.vertex;
      ++found;
      return true;
    }
    return false;
  });
  if (found != 2) throw std::logic_error("gluing legs not found");
  edges.push_back({hu, hw, species});
  return Graph::make(vertex_count, std::move(legs), std::move(edges));
}

}  // namespace

Graph single_vertex(std::span<const ExternalLeg> legs) {
  std::vector<Leg> placed;
  placed.reserve(legs.size());
  for (const ExternalLeg& leg : legs) placed.push_back({0, leg.label, leg.species});
  return Graph::make(1, std::move(placed), {});
}

GraphSum substitute_legs(const GraphSum& generic, std::span<const ExternalLeg> legs,
                         bool recanonicalize) {
  GraphSum out;
  for (const auto& [g, w] : generic) {
    std::vector<Leg> placed = g.legs();
    for (Leg& leg : placed) {
      const auto k = static_cast<std::size_t>(leg.label.id - 1);
      if (k >= legs.size()) throw std::out_of_range("generic label without substitute");
      leg.label = legs[k].label;
      leg.species = legs[k].species;
    }
    Graph relabelled = Graph::make(g.vertex_count(), std::move(placed), g.edges());
    out.add(recanonicalize ? canonical_unordered(relabelled) : std::move(relabelled), w);
  }
  return out;
}

Generator::Generator(GeneratorOptions options) : options_(options) {
  if (options_.species < 1 || options_.species > 255) {
    throw std::invalid_argument("species count must be in [1, 255]");
  }
}

void Generator::clear_cache() {
  std::lock_guard lock(mutex_);
  ordered_cache_.clear();
  unordered_cache_.clear();
}

std::shared_ptr<const GraphSum> Generator::generic(int loops, int vertices, int n,
                                                   bool unordered) const {
  Cache& cache = unordered ? unordered_cache_ : ordered_cache_;
  const Key key{loops, vertices, n};
  if (options_.memoize) {
    std::lock_guard lock(mutex_);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto result = compute(loops, vertices, n, unordered);
  if (options_.memoize) {
    std::lock_guard lock(mutex_);
    // First writer wins; a concurrent duplicate computed the same value.
    return cache.try_emplace(key, std::move(result)).first->second;
  }
  return result;
}

std::shared_ptr<const GraphSum> Generator::compute(int loops, int vertices, int n,
                                                   bool unordered) const {
  const std::vector<ExternalLeg> legs = make_legs(n);
  if (loops == 0 && vertices == 1) {
    return std::make_shared<const GraphSum>(single_vertex(legs), Weight(1));
  }
  const OpOptions op{options_.species, options_.threads};
  GraphSum acc;
  if (vertices > 1) {
    auto prev = generic(loops, vertices - 1, n, unordered);
    for (int i = 0; i < vertices - 1; ++i) acc += apply_Q(static_cast<Vertex>(i), *prev, op);
  }
  if (loops > 0) {
    auto prev = generic(loops - 1, vertices, n, unordered);
    for (int i = 0; i < vertices; ++i) acc += apply_T(static_cast<Vertex>(i), *prev, op);
  }
  acc *= Rational(1, loops + vertices - 1);
  if (unordered) acc = forget_order(acc, options_.threads);
  return std::make_shared<const GraphSum>(std::move(acc));
}

GraphSum Generator::omega_with_legs(int loops, int vertices,
                                    std::span<const ExternalLeg> legs) const {
  auto base = generic(loops, vertices, static_cast<int>(legs.size()), false);
  if (is_generic(legs)) return *base;
  return substitute_legs(*base, legs, false);
}

GraphSum Generator::omega(int loops, int vertices, std::span<const ExternalLeg> legs) const {
  check_shape(loops, vertices);
  check_user_legs(legs, options_.species);
  return omega_with_legs(loops, vertices, legs);
}

GraphSum Generator::enumerate_connected(int loops, int vertices,
                                        std::span<const ExternalLeg> legs) const {
  check_shape(loops, vertices);
  check_user_legs(legs, options_.species);
  auto base = generic(loops, vertices, static_cast<int>(legs.size()), true);
  if (is_generic(legs)) return *base;
  return substitute_legs(*base, legs, true);
}

GraphSum Generator::omega_alt(int loops, int vertices, std::span<const ExternalLeg> legs) const {
  check_shape(loops, vertices);
  check_user_legs(legs, options_.species);
  if (loops == 0 && vertices == 1) {
    throw std::invalid_argument("the splitting recursion is undefined for (l, v) = (0, 1)");
  }
  const ExternalLabel u{kVirtualLabelBase};
  const ExternalLabel w{kVirtualLabelBase + 1};
  GraphSum acc;

  for (int s = 1; s <= options_.species; ++s) {
    const Species species{static_cast<std::uint8_t>(s)};

    if (loops > 0) {
      std::vector<ExternalLeg> extended(legs.begin(), legs.end());
      extended.push_back({u, species});
      extended.push_back({w, species});
      GraphSum inner = omega_with_legs(loops - 1, vertices, extended);
      GraphSum glued = detail::map_terms(
          inner, options_.threads, [&](const Graph& g, const Weight& wt, GraphSum& out) {
            out.add(glue(g.vertex_count(), g.legs(), g.edges(), u, w, species), wt * kHalf);
          });
      acc += glued;
    }

    if (vertices > 1) {
      const std::size_t n = legs.size();
      for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<ExternalLeg> left;
        std::vector<ExternalLeg> right;
        for (std::size_t k = 0; k < n; ++k) ((mask >> k & 1) ? right : left).push_back(legs[k]);
        left.push_back({u, species});
        right.push_back({w, species});
        for (int a = 0; a <= loops; ++a) {
          for (int b = 1; b <= vertices - 1; ++b) {
            GraphSum first = omega_with_legs(a, b, left);
            GraphSum second = omega_with_legs(loops - a, vertices - b, right);
            GraphSum joined = detail::map_terms(
                first, options_.threads, [&](const Graph& g1, const Weight& w1, GraphSum& out) {
                  for (const auto& [g2, w2] : second) {
                    std::vector<Leg> joined_legs = g1.legs();
                    std::vector<Edge> joined_edges = g1.edges();
                    for (Leg leg : g2.legs()) {
                      leg.vertex = static_cast<Vertex>(leg.vertex + b);
                      joined_legs.push_back(leg);
                    }
                    for (Edge e : g2.edges()) {
                      e.a = static_cast<Vertex>(e.a + b);
                      e.b = static_cast<Vertex>(e.b + b);
                      joined_edges.push_back(e);
                    }
                    out.add(glue(vertices, std::move(joined_legs), std::move(joined_edges), u, w,
                                 species),
                            w1 * w2 * kHalf);
                  }
                });
            acc += joined;
          }
        }
      }
    }
  }
  acc *= Rational(1, loops + vertices - 1);
  return acc;
}

}  // namespace hopfgraph
