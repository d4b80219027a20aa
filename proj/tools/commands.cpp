#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "bundled_model.hpp"
#include "hopfgraph/brute_force.hpp"
#include "hopfgraph/feynman.hpp"
#include "hopfgraph/generator.hpp"
#include "hopfgraph/graph_io.hpp"
#include "hopfgraph/symmetry.hpp"
#include "hopfgraph/zero_d.hpp"

namespace hopfgraph::cli {

namespace {

const char* const kCheck = "✓";
const char* const kCross = "✗";

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = display_width(header[c]);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - display_width(cells[c]) + 2, ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Guard on internal edges, checked before any generation.
bool guard(int edges, const Context& ctx, std::ostream& err) {
  if (edges <= ctx.edge_limit) return true;
  err << "error: " << edges << " internal edges exceed the limit of " << ctx.edge_limit
      << " (raise it with --edge-limit or HOPFGRAPH_EDGE_LIMIT)\n";
  return false;
}

bool valid_species(int species, std::ostream& err) {
  if (species >= 1 && species <= 255) return true;
  err << "error: species must lie in 1..255\n";
  return false;
}

Generator make_generator(int species, const Context& ctx) {
  return Generator({.species = species, .memoize = true, .threads = ctx.threads});
}

GraphSum generate(int loops, int vertices, int legs, bool ordered, const Generator& gen) {
  const auto labels = make_legs(legs);
  return ordered ? gen.omega(loops, vertices, labels) : gen.enumerate_connected(loops, vertices, labels);
}

std::string summary_json(std::size_t terms, const Weight& total) {
  return "{\"summary\":{\"terms\":" + std::to_string(terms) + ",\"total_weight\":" + quoted(to_string(total)) +
         "}}";
}

void write_terms(std::ostream& out, const GraphSum& sum, const std::string& format, bool with_symmetry) {
  if (format == "json") {
    for (const auto& [g, w] : sum) out << term_to_json(g, w) << '\n';
    out << summary_json(sum.size(), sum.total_weight()) << '\n';
    return;
  }
  if (format == "dot") {
    out << to_dot(sum);
    return;
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t index = 0;
  for (const auto& [g, w] : sum) {
    std::vector<std::string> row{std::to_string(++index), signature(g), to_string(w)};
    if (with_symmetry) {
      BigInt s = symmetry_factor(g);
      row.push_back(s.get_str());
      row.push_back(w * s == 1 ? kCheck : kCross);
    }
    rows.push_back(std::move(row));
  }
  if (with_symmetry) {
    print_table(out, {"#", "graph", "weight", "S", "weight*S=1"}, rows);
  } else {
    print_table(out, {"#", "graph", "weight"}, rows);
  }
  out << "terms: " << sum.size() << "  total weight: " << to_string(sum.total_weight()) << '\n';
}

bool all_weight_law(const GraphSum& sum) {
  return std::all_of(sum.begin(), sum.end(), [](const auto& term) { return term.second * symmetry_factor(term.first) == 1; });
}

// Maps library exceptions to exit codes.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kGuard;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailed;
  }
}

std::string monomial_name(const Series::Monomial& m, const VariablesPtr& vars) {
  if (m.empty()) return "1";
  std::string name;
  for (std::size_t i = 0; i < m.size(); ++i) {
    name += (i ? " " : "") + vars->name(i) + "^" + std::to_string(m[i]);
  }
  return name;
}

// First monomial where two series differ, as a JSON fragment.
std::string first_difference(const Series& a, const Series& b) {
  std::map<Series::Monomial, std::pair<Rational, Rational>> both;
  for (const auto& [m, c] : a.terms()) both[m].first = c;
  for (const auto& [m, c] : b.terms()) both[m].second = c;
  for (const auto& [m, values] : both) {
    if (values.first != values.second) {
      return "\"monomial\":" + quoted(monomial_name(m, a.variables())) + ",\"graphs\":" +
             quoted(to_string(values.first)) + ",\"oracle\":" + quoted(to_string(values.second));
    }
  }
  return "";
}

int check_weights(const CheckArgs& args, const Context& ctx, std::ostream& out) {
  const int max_edges = args.max_edges.value_or(4);
  const int max_legs = args.max_legs.value_or(3);
  Generator gen = make_generator(args.species, ctx);
  std::size_t graphs = 0;
  for (int e = 0; e <= max_edges; ++e) {
    for (int n = 0; n <= max_legs; ++n) {
      for (int v = 1; v <= e + 1; ++v) {
        const int l = e - v + 1;
        for (const auto& [g, w] : gen.enumerate_connected(l, v, make_legs(n))) {
          ++graphs;
          const GraphStats stats = graph_stats(g);
          const bool bookkeeping = stats.connected && stats.vertices == v && stats.edges == e && stats.legs == n;
          const BigInt s = symmetry_factor(g);
          if (!bookkeeping || w * s != 1) {
            out << "weights: FAIL at loops=" << l << " vertices=" << v << " legs=" << n << '\n';
            out << "{\"graph\":" << to_json(g) << ",\"weight\":" << quoted(to_string(w))
                << ",\"symmetry_factor\":" << quoted(s.get_str()) << ",\"bookkeeping\":" << (bookkeeping ? "true" : "false")
                << "}\n";
            return kFailed;
          }
        }
      }
    }
  }
  out << "weights: " << graphs << " graphs with at most " << max_edges << " edges and " << max_legs
      << " legs, all weight*S = 1 " << kCheck << '\n';
  return kOk;
}

int check_equivalence(const CheckArgs& args, const Context& ctx, std::ostream& out) {
  const int max_edges = args.max_edges.value_or(4);
  const int max_legs = args.max_legs.value_or(2);
  Generator gen = make_generator(args.species, ctx);
  std::size_t cases = 0;
  std::size_t terms = 0;
  for (int e = 0; e <= max_edges; ++e) {
    for (int n = 0; n <= max_legs; ++n) {
      for (int v = 1; v <= e + 1; ++v) {
        const int l = e - v + 1;
        if (l == 0 && v == 1) continue;
        const auto legs = make_legs(n);
        GraphSum a = gen.omega(l, v, legs);
        GraphSum b = gen.omega_alt(l, v, legs);
        ++cases;
        terms += a.size();
        if (a == b) continue;
        out << "equivalence: FAIL at loops=" << l << " vertices=" << v << " legs=" << n << '\n';
        GraphSum diff = a + b * Rational(-1);
        const auto& [g, w] = *diff.begin();
        out << "{\"graph\":" << to_json(g) << ",\"omega\":" << quoted(to_string(a.weight(g)))
            << ",\"omega_alt\":" << quoted(to_string(b.weight(g))) << "}\n";
        return kFailed;
      }
    }
  }
  out << "equivalence: omega = omega_alt in " << cases << " cases (" << terms << " ordered terms) " << kCheck << '\n';
  return kOk;
}

int check_oracle(const CheckArgs& args, const Context& ctx, std::ostream& out) {
  FieldModel model = args.model.empty() ? parse_model(detail::kBundledPhi3) : load_model(args.model);
  const int max_legs = args.max_legs.value_or(4);
  const bool shift = model.one_point == OnePoint::vanish;
  Generator gen = make_generator(model.species, ctx);
  EvalOptions options;
  options.max_order = args.max_order;
  options.max_edges = ctx.edge_limit;
  for (int n = 0; n <= max_legs; ++n) {
    // Dropping tadpoles matches the shifted source only for n >= 1.
    if (shift && n == 0) continue;
    Series graphs = connected_function(gen, model, n, options).total;
    Series oracle = zero_d_connected_oracle(model, n, args.max_order, shift);
    if (graphs != oracle) {
      out << "oracle: FAIL at legs=" << n << '\n';
      out << "{\"legs\":" << n << ',' << first_difference(graphs, oracle) << "}\n";
      return kFailed;
    }
    out << "oracle: G_c^(" << n << ") matches log Z through order " << args.max_order << ' ' << kCheck << '\n';
  }
  return kOk;
}

int check_trees(const CheckArgs& args, const Context& ctx, std::ostream& out) {
  const int max_edges = args.max_edges.value_or(4);
  const int max_legs = args.max_legs.value_or(4);
  Generator gen = make_generator(args.species, ctx);
  std::size_t trees = 0;
  for (int v = 1; v <= max_edges + 1; ++v) {
    for (int n = 0; n <= max_legs; ++n) {
      for (const auto& [g, w] : gen.enumerate_connected(0, v, make_legs(n))) {
        auto d = g.degrees();
        if (*std::min_element(d.begin(), d.end()) < 2) continue;
        ++trees;
        if (w != 1) {
          out << "trees: FAIL at vertices=" << v << " legs=" << n << '\n';
          out << "{\"graph\":" << to_json(g) << ",\"weight\":" << quoted(to_string(w)) << "}\n";
          return kFailed;
        }
      }
    }
  }
  out << "trees: " << trees << " trees with valence >= 2, all weight 1 " << kCheck << '\n';
  return kOk;
}

bool known_format(const std::string& format, std::initializer_list<const char*> allowed, std::ostream& err) {
  for (const char* a : allowed) {
    if (format == a) return true;
  }
  err << "error: unknown format '" << format << "'\n";
  return false;
}

}  // namespace

const char* bundled_phi3_model() { return detail::kBundledPhi3; }

int cmd_enum(const EnumArgs& args, const Context& ctx, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (!known_format(args.format, {"table", "json", "dot"}, err) || !valid_species(args.species, err)) return kUsage;
    if (!guard(args.loops + args.vertices - 1, ctx, err)) return kGuard;
    Generator gen = make_generator(args.species, ctx);
    GraphSum sum = generate(args.loops, args.vertices, args.legs, args.ordered, gen);
    write_terms(out, sum, args.format, !args.ordered);
    return kOk;
  });
}

int cmd_eval(const EvalArgs& args, const Context& ctx, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    FieldModel model = load_model(args.model);
    EvalOptions options;
    options.max_order = args.max_order;
    options.max_edges = ctx.edge_limit;
    if (!valid_species(args.leg_species, err)) return kUsage;
    options.leg_species = Species{static_cast<std::uint8_t>(args.leg_species)};
    if (args.one_point == "keep") {
      options.one_point = OnePoint::keep;
    } else if (args.one_point == "vanish") {
      options.one_point = OnePoint::vanish;
    } else if (!args.one_point.empty()) {
      err << "error: --one-point expects keep or vanish\n";
      return kUsage;
    }
    Generator gen = make_generator(model.species, ctx);
    ConnectedFunction f = connected_function(gen, model, args.legs, options);
    if (args.per_loop) {
      for (const auto& [lv, s] : f.by_loops_vertices) {
        out << "loops " << lv.first << " vertices " << lv.second << ":\n";
        std::istringstream rows(s.to_table());
        for (std::string row; std::getline(rows, row);) out << "  " << row << '\n';
      }
      out << "total:\n";
    }
    out << f.total.to_table();
    return kOk;
  });
}

int cmd_check(const CheckArgs& args, const Context& ctx, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (!valid_species(args.species, err)) return kUsage;
    if (args.max_edges && (*args.max_edges < 0 || !guard(*args.max_edges, ctx, err))) {
      return *args.max_edges < 0 ? kUsage : kGuard;
    }
    if (args.max_legs && *args.max_legs < 0) {
      err << "error: --max-legs must be non-negative\n";
      return kUsage;
    }
    if (args.suite == "weights") return check_weights(args, ctx, out);
    if (args.suite == "equivalence") return check_equivalence(args, ctx, out);
    if (args.suite == "oracle") return check_oracle(args, ctx, out);
    if (args.suite == "trees") return check_trees(args, ctx, out);
    err << "error: unknown suite '" << args.suite << "'\n";
    return kUsage;
  });
}

int cmd_trees(const TreesArgs& args, const Context& ctx, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (!known_format(args.format, {"table", "json", "dot"}, err)) return kUsage;
    if (!guard(args.vertices - 1, ctx, err)) return kGuard;
    Generator gen = make_generator(1, ctx);
    const int min_valence = args.modified ? 3 : 2;
    GraphSum trees;
    for (const auto& [g, w] : gen.enumerate_connected(0, args.vertices, make_legs(args.legs))) {
      auto d = g.degrees();
      if (*std::min_element(d.begin(), d.end()) >= min_valence) trees.add(g, w);
    }
    write_terms(out, trees, args.format, true);
    if (!all_weight_law(trees) || std::any_of(trees.begin(), trees.end(), [](const auto& t) { return t.second != 1; })) {
      err << "error: a tree has weight different from 1\n";
      return kFailed;
    }
    return kOk;
  });
}

int cmd_export(const ExportArgs& args, const Context& ctx, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (!known_format(args.format, {"json", "dot"}, err) || !valid_species(args.species, err)) return kUsage;
    GraphSum sum;
    if (!args.input.empty()) {
      std::ifstream in(args.input);
      if (!in) {
        err << "error: cannot read '" << args.input << "'\n";
        return kUsage;
      }
      std::ostringstream text;
      text << in.rdbuf();
      sum = graph_sum_from_json(text.str());
    } else {
      if (!guard(args.loops + args.vertices - 1, ctx, err)) return kGuard;
      Generator gen = make_generator(args.species, ctx);
      sum = generate(args.loops, args.vertices, args.legs, args.ordered, gen);
    }
    const std::string document = args.format == "json" ? to_json(sum) + "\n" : to_dot(sum);
    if (args.output.empty()) {
      out << document;
    } else {
      std::ofstream file(args.output, std::ios::binary);
      file << document;
      if (!file) {
        err << "error: cannot write '" << args.output << "'\n";
        return kFailed;
      }
    }
    return kOk;
  });
}

}  // namespace hopfgraph::cli
