#include "hopfgraph/graph_sum.hpp"

#include "hopfgraph/canonical.hpp"
#include "parallel.hpp"

namespace hopfgraph {

void GraphSum::add(const Graph& g, const Weight& w) {
  if (w == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, w);
  if (!inserted) {
    it->second += w;
    if (it->second == 0) terms_.erase(it);
  }
}

void GraphSum::add(Graph&& g, const Weight& w) {
  if (w == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(std::move(g), w);
    return;
  }
  it->second += w;
  if (it->second == 0) terms_.erase(it);
}

GraphSum& GraphSum::operator+=(const GraphSum& other) {
  for (const auto& [g, w] : other.terms_) add(g, w);
  return *this;
}

GraphSum& GraphSum::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, w] : terms_) w *= factor;
  return *this;
}

Weight GraphSum::weight(const Graph& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Weight(0) : it->second;
}

Weight GraphSum::total_weight() const {
  Weight total = 0;
  for (const auto& [g, w] : terms_) total += w;
  return total;
}

GraphSum operator+(GraphSum lhs, const GraphSum& rhs) {
  lhs += rhs;
  return lhs;
}

GraphSum operator*(GraphSum lhs, const Rational& factor) {
  lhs *= factor;
  return lhs;
}

GraphSum forget_order(const GraphSum& s, unsigned threads) {
  return detail::map_terms(s, threads, [](const Graph& g, const Weight& w, GraphSum& out) {
    out.add(canonical_unordered(g), w);
  });
}

}  // namespace hopfgraph
