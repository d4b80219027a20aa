#pragma once

#include <string>
#include <string_view>

#include "hopfgraph/graph.hpp"
#include "hopfgraph/graph_sum.hpp"

namespace hopfgraph {

// {"v": 2, "legs": [[vertex, label, species], ...], "edges": [[i, j, species], ...]}
// with 1-based vertices, in canonical sort order. Single line, no spaces.
std::string to_json(const Graph& g);

// {"terms": [{"graph": {...}, "weight": "p/q"}, ...]}
std::string to_json(const GraphSum& s);

// One streaming record: {"graph": {...}, "weight": "p/q"}
std::string term_to_json(const Graph& g, const Weight& w);

// Parsing canonicalizes whatever order the input uses. Malformed documents
// throw std::invalid_argument, bad vertex indices std::out_of_range.
Graph graph_from_json(std::string_view text);
GraphSum graph_sum_from_json(std::string_view text);

// Undirected DOT: vertices as circles, each leg an edge to an invisible
// node labelled with its external label, parallel edges and self-loops
// written out one by one, non-default species as edge labels, and the weight
// in the graph label.
std::string to_dot(const Graph& g, const Weight& w, std::string_view name = "G");
std::string to_dot(const GraphSum& s);

// "v=2 legs[x1@1] edges[1-2 1-1]": compact one-line signature for tables.
std::string signature(const Graph& g);

}  // namespace hopfgraph
