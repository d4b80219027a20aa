#include "hopfgraph/one_pi.hpp"

#include <algorithm>
#include <bit>

namespace hopfgraph {

OnePITable::OnePITable(VariablesPtr ring) : ring_(std::move(ring)) {}

void OnePITable::set(int n, Series value) {
  if (n < 0) throw std::invalid_argument("negative leg count");
  if (!(*value.variables() == *ring_)) throw std::invalid_argument("table entry from a different ring");
  entries_.insert_or_assign(n, std::move(value));
}

Series OnePITable::at(int n) const {
  auto it = entries_.find(n);
  if (it != entries_.end()) return it->second;
  if (n == 0 || n == 1) return Series(ring_);
  throw TruncationError("1PI table has no entry for " + std::to_string(n) + " legs");
}

void OnePITable::validate(OnePIMode mode) const {
  for (const auto& [n, value] : entries_) {
    if ((n == 0 || n == 1) && !value.is_zero()) {
      throw std::invalid_argument("1PI functions with 0 or 1 legs must vanish");
    }
    if (mode == OnePIMode::modified && n == 2 && !value.is_zero()) {
      throw std::invalid_argument("the modified 1PI 2-point function must vanish");
    }
  }
}

namespace {

int min_valence(OnePIMode mode) { return mode == OnePIMode::modified ? 3 : 2; }

Series edge_factor(const OnePITable& tau, const Series& two_point) {
  if (!(*two_point.variables() == *tau.ring())) throw std::invalid_argument("two-point value from a different ring");
  return two_point.inverse();
}

}  // namespace

Series connected_from_1pi(const Generator& gen, int vertices, std::span<const ExternalLeg> legs,
                          const OnePITable& tau, const Series& two_point, OnePIMode mode) {
  if (vertices < 1) throw std::invalid_argument("vertex count must be positive");
  tau.validate(mode);
  const Series edge = edge_factor(tau, two_point);
  // Trees sharing a degree sequence share a value.
  std::map<std::vector<int>, Rational> weights;
  for (const auto& [g, w] : gen.enumerate_connected(0, vertices, legs)) {
    auto degrees = g.degrees();
    if (*std::min_element(degrees.begin(), degrees.end()) < min_valence(mode)) continue;
    std::sort(degrees.begin(), degrees.end());
    weights[degrees] += w;
  }
  Series total(tau.ring());
  const Series edges = edge.pow(static_cast<unsigned>(vertices - 1));
  for (const auto& [degrees, w] : weights) {
    Series term = edges * w;
    for (int d : degrees) term *= tau.at(d);
    total += term;
  }
  return total;
}

Series connected_from_1pi_rec(int vertices, std::span<const ExternalLeg> legs, const OnePITable& tau,
                              const Series& two_point, OnePIMode mode) {
  if (vertices < 1) throw std::invalid_argument("vertex count must be positive");
  const int n = static_cast<int>(legs.size());
  if (n > 20) throw std::invalid_argument("too many legs for bipartition enumeration");
  tau.validate(mode);
  const Series edge = edge_factor(tau, two_point) * Rational(1, 2);
  const Series zero(tau.ring());
  // sigma[v][m]: value on m legs; a single-species table makes it depend on
  // the leg count only.
  std::vector<std::vector<Series>> sigma(static_cast<std::size_t>(vertices) + 1);
  const int top = n + vertices - 1;
  sigma[1].reserve(static_cast<std::size_t>(top) + 1);
  for (int m = 0; m <= top; ++m) {
    const bool vanishes = m < min_valence(mode);
    sigma[1].push_back(vanishes ? zero : (tau.contains(m) || m < 2 ? tau.at(m) : zero));
  }
  for (int v = 2; v <= vertices; ++v) {
    const int legs_here = n + vertices - v;  // the top level only needs n
    for (int m = 0; m <= legs_here; ++m) {
      Series value(tau.ring());
      for (int i = 1; i < v; ++i) {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
          const int a = std::popcount(mask);
          const Series& left = sigma[i][a + 1];
          const Series& right = sigma[v - i][m - a + 1];
          if (left.is_zero() || right.is_zero()) continue;
          value += left * edge * right;
        }
      }
      value *= Rational(1, v - 1);
      sigma[v].push_back(std::move(value));
    }
  }
  // Any tree whose vertices all reach the minimal valence has degrees <= n,
  // so a missing entry above n only ever met zero partners; entries up to n
  // must exist.
  for (int m = min_valence(mode); m <= n; ++m) {
    if (!tau.contains(m)) (void)tau.at(m);
  }
  return sigma[static_cast<std::size_t>(vertices)][static_cast<std::size_t>(n)];
}

int modified_max_vertices(int n) { return n >= 3 ? n - 2 : 0; }

TreeExpansion connected_from_1pi_sum(const Generator& gen, int n, const OnePITable& tau, const Series& two_point,
                                     OnePIMode mode, std::optional<int> max_vertices) {
  if (n < 0) throw std::invalid_argument("leg count must be non-negative");
  tau.validate(mode);
  TreeExpansion result{Series(tau.ring()), {}, 0};
  if (n == 2) {
    result.total += two_point;
    result.by_vertices.emplace(0, two_point);
  }
  int last = 0;
  if (mode == OnePIMode::modified) {
    last = modified_max_vertices(n);
  } else if (max_vertices) {
    last = *max_vertices;
  } else {
    // Every vertex of a contributing tree has valence 2..n; if those entries
    // all vanish at zero coupling, each vertex raises the total degree.
    int min_order = -1;
    for (int d = 2; d <= n; ++d) {
      Series entry = tau.at(d);
      if (entry.is_zero()) continue;
      if (entry.constant_term() != 0) {
        throw std::invalid_argument("standard tree expansion does not terminate: tau(" + std::to_string(d) +
                                    ") has a constant term; give a vertex bound");
      }
      int o = *entry.order();
      min_order = min_order < 0 ? o : std::min(min_order, o);
    }
    int total_order = 0;
    for (std::size_t i = 0; i < tau.ring()->size(); ++i) total_order += tau.ring()->order(i);
    last = min_order < 0 || n < 2 ? 0 : total_order / min_order;
  }
  const auto legs = make_legs(n);
  for (int v = 1; v <= last; ++v) {
    Series part = connected_from_1pi(gen, v, legs, tau, two_point, mode);
    result.total += part;
    result.by_vertices.emplace(v, std::move(part));
  }
  result.max_vertices = last;
  return result;
}

}  // namespace hopfgraph
