#include "hopfgraph/symmetry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "hopfgraph/canonical.hpp"

namespace hopfgraph {

namespace {

class VertexAutomorphismCounter {
 public:
  explicit VertexAutomorphismCounter(const Graph& g)
      : v_(static_cast<std::size_t>(g.vertex_count())),
        colors_(vertex_colors(g)),
        pinned_(v_, false),
        image_(v_, 0),
        used_(v_, false) {
    for (const Leg& leg : g.legs()) pinned_[leg.vertex] = true;
    for (const Edge& e : g.edges()) species_ = std::max<std::size_t>(species_, e.species.id);
    multiplicity_.assign(v_ * v_ * species_, 0);
    for (const Edge& e : g.edges()) {
      ++multiplicity_[index(e.a, e.b, e.species.id)];
      if (e.a != e.b) ++multiplicity_[index(e.b, e.a, e.species.id)];
    }
  }

  long long count() {
    total_ = 0;
    extend(0);
    return total_;
  }

 private:
  std::size_t index(std::size_t a, std::size_t b, std::size_t s) const {
    return (a * v_ + b) * species_ + (s - 1);
  }

  bool consistent(std::size_t u) const {
    for (std::size_t w = 0; w <= u; ++w) {
      for (std::size_t s = 1; s <= species_; ++s) {
        if (multiplicity_[index(u, w, s)] != multiplicity_[index(image_[u], image_[w], s)]) {
          return false;
        }
      }
    }
    return true;
  }

  void extend(std::size_t u) {
    if (u == v_) {
      ++total_;
      return;
    }
    for (std::size_t target = 0; target < v_; ++target) {
      if (used_[target] || colors_[target] != colors_[u]) continue;
      if (pinned_[u] && target != u) continue;
      image_[u] = target;
      if (!consistent(u)) continue;
      used_[target] = true;
      extend(u + 1);
      used_[target] = false;
    }
  }

  std::size_t v_;
  std::size_t species_ = 1;
  std::vector<int> colors_;
  std::vector<bool> pinned_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<int> multiplicity_;
  long long total_ = 0;
};

}  // namespace

BigInt symmetry_factor(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("symmetry_factor requires a connected graph");
  }
  BigInt result(static_cast<long>(VertexAutomorphismCounter(g).count()));

  std::map<std::tuple<Vertex, Vertex, Species>, unsigned long> classes;
  for (const Edge& e : g.edges()) ++classes[{e.a, e.b, e.species}];
  for (const auto& [key, k] : classes) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    result *= f;
    if (std::get<0>(key) == std::get<1>(key)) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
      result *= p;
    }
  }
  return result;
}

}  // namespace hopfgraph
