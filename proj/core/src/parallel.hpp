#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "hopfgraph/graph_sum.hpp"

namespace hopfgraph::detail {

// Applies fn(graph, weight, out) to every term of s and sums the outputs.
// With threads > 1 the terms are split into contiguous chunks, each chunk
// fills its own partial sum, and the partials are merged in chunk order.
// GraphSum addition is exact, so the result is identical for any split.
template <class Fn>
GraphSum map_terms(const GraphSum& s, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(s.size())));
  if (threads <= 1) {
    GraphSum out;
    for (const auto& [g, w] : s) fn(g, w, out);
    return out;
  }
  std::vector<const GraphSum::Map::value_type*> items;
  items.reserve(s.size());
  for (const auto& term : s) items.push_back(&term);

  std::vector<GraphSum> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  const std::size_t chunk = (items.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(items.size(), lo + chunk);
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(items[i]->first, items[i]->second, partial[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  GraphSum out = std::move(partial[0]);
  for (unsigned t = 1; t < threads; ++t) out += partial[t];
  return out;
}

}  // namespace hopfgraph::detail
