#include "hopfgraph/graph_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hopfgraph {

using nlohmann::json;

namespace {

json graph_json(const Graph& g) {
  json legs = json::array();
  for (const Leg& leg : g.legs()) {
    legs.push_back({leg.vertex + 1, leg.label.id, leg.species.id});
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.a + 1, e.b + 1, e.species.id});
  }
  json out = json::object();
  out["v"] = g.vertex_count();
  out["legs"] = std::move(legs);
  out["edges"] = std::move(edges);
  return out;
}

// nlohmann::json sorts object keys; emit the documented key order by hand.
std::string dump_graph(const Graph& g) {
  json j = graph_json(g);
  return "{\"v\":" + j["v"].dump() + ",\"legs\":" + j["legs"].dump() +
         ",\"edges\":" + j["edges"].dump() + "}";
}

Vertex parse_vertex(const json& value) {
  long long v = value.get<long long>();
  if (v < 1 || v > 0xFFFF) {
    throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
  }
  return static_cast<Vertex>(v - 1);
}

Species parse_species(const json& value) {
  long long s = value.get<long long>();
  if (s < 1 || s > 255) {
    throw std::invalid_argument("species id " + std::to_string(s) + " out of range");
  }
  return Species{static_cast<std::uint8_t>(s)};
}

Graph parse_graph(const json& j) {
  if (!j.is_object() || !j.contains("v")) {
    throw std::invalid_argument("graph JSON must be an object with key \"v\"");
  }
  int v = j.at("v").get<int>();
  std::vector<Leg> legs;
  for (const json& item : j.value("legs", json::array())) {
    if (!item.is_array() || item.size() != 3) {
      throw std::invalid_argument("leg must be [vertex, label, species]");
    }
    long long label = item[1].get<long long>();
    if (label < 1 || label >= kVirtualLabelBase) {
      throw std::invalid_argument("leg label " + std::to_string(label) + " out of range");
    }
    legs.push_back({parse_vertex(item[0]), ExternalLabel{static_cast<std::int32_t>(label)},
                    parse_species(item[2])});
  }
  std::vector<Edge> edges;
  for (const json& item : j.value("edges", json::array())) {
    if (!item.is_array() || item.size() != 3) {
      throw std::invalid_argument("edge must be [i, j, species]");
    }
    edges.push_back({parse_vertex(item[0]), parse_vertex(item[1]), parse_species(item[2])});
  }
  return Graph::make(v, std::move(legs), std::move(edges));
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

template <class Fn>
auto guarded(Fn fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const Graph& g) { return dump_graph(g); }

std::string term_to_json(const Graph& g, const Weight& w) {
  return "{\"graph\":" + dump_graph(g) + ",\"weight\":\"" + to_string(w) + "\"}";
}

std::string to_json(const GraphSum& s) {
  std::string out = "{\"terms\":[";
  bool first = true;
  for (const auto& [g, w] : s) {
    if (!first) out += ",";
    first = false;
    out += term_to_json(g, w);
  }
  out += "]}";
  return out;
}

Graph graph_from_json(std::string_view text) {
  json doc = parse_document(text);
  return guarded([&] { return parse_graph(doc); });
}

GraphSum graph_sum_from_json(std::string_view text) {
  json doc = parse_document(text);
  return guarded([&] {
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
      throw std::invalid_argument("graph sum JSON must be {\"terms\": [...]}");
    }
    GraphSum s;
    for (const json& term : doc["terms"]) {
      s.add(parse_graph(term.at("graph")), parse_rational(term.at("weight").get<std::string>()));
    }
    return s;
  });
}

std::string to_dot(const Graph& g, const Weight& w, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  label=\"weight " << to_string(w) << "\";\n";
  out << "  node [shape=circle];\n";
  for (int i = 1; i <= g.vertex_count(); ++i) {
    out << "  v" << i << " [label=\"" << i << "\"];\n";
  }
  for (const Leg& leg : g.legs()) {
    out << "  x" << leg.label.id << " [style=invis, shape=point];\n";
    out << "  v" << leg.vertex + 1 << " -- x" << leg.label.id << " [label=\"x"
        << leg.label.id;
    if (leg.species.id != 1) out << " s" << int(leg.species.id);
    out << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  v" << e.a + 1 << " -- v" << e.b + 1;
    if (e.species.id != 1) out << " [label=\"s" << int(e.species.id) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const GraphSum& s) {
  std::string out;
  int index = 1;
  for (const auto& [g, w] : s) {
    out += to_dot(g, w, "G" + std::to_string(index++));
  }
  return out;
}

std::string signature(const Graph& g) {
  std::ostringstream out;
  out << "v=" << g.vertex_count() << " legs[";
  bool first = true;
  for (const Leg& leg : g.legs()) {
    if (!first) out << ' ';
    first = false;
    out << 'x' << leg.label.id << '@' << leg.vertex + 1;
    if (leg.species.id != 1) out << ':' << int(leg.species.id);
  }
  out << "] edges[";
  first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out << ' ';
    first = false;
    out << e.a + 1 << '-' << e.b + 1;
    if (e.species.id != 1) out << ':' << int(e.species.id);
  }
  out << ']';
  return out.str();
}

}  // namespace hopfgraph
