#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace cli = hopfgraph::cli;

int main(int argc, char** argv) {
  CLI::App app{"Weighted generation of connected graphs and their zero-dimensional n-point functions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read flags from a TOML file");

  cli::Context ctx;
  app.add_option("--edge-limit", ctx.edge_limit, "Refuse jobs with more internal edges")
      ->envname("HOPFGRAPH_EDGE_LIMIT")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--threads", ctx.threads, "Worker threads inside the library")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  const auto formats = CLI::IsMember({"table", "json", "dot"});

  cli::EnumArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enum", "Enumerate weighted connected graphs");
  enum_cmd->add_option("--loops,-l", enum_args.loops, "Loop number")->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--vertices,-v", enum_args.vertices, "Vertex count")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--legs,-n", enum_args.legs, "External legs")->check(CLI::NonNegativeNumber);
  enum_cmd->add_flag("--ordered", enum_args.ordered, "Print the vertex-ordered sum");
  enum_cmd->add_option("--species", enum_args.species, "Edge species count")->check(CLI::Range(1, 255));
  enum_cmd->add_option("--format", enum_args.format, "table, json or dot")->check(formats);

  cli::EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a connected n-point function for a model");
  eval_cmd->add_option("--model,-m", eval_args.model, "Model file")->required();
  eval_cmd->add_option("--legs,-n", eval_args.legs, "External legs")->required()->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--max-order,-p", eval_args.max_order, "Truncation order for every coupling variable")
      ->required()
      ->check(CLI::NonNegativeNumber);
  eval_cmd->add_flag("--per-loop", eval_args.per_loop, "Also print each (loops, vertices) part");
  eval_cmd->add_option("--leg-species", eval_args.leg_species, "Species of the external legs")
      ->check(CLI::Range(1, 255));
  eval_cmd->add_option("--one-point", eval_args.one_point, "keep or vanish; overrides the model")
      ->check(CLI::IsMember({"keep", "vanish"}));

  cli::CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Run a property suite");
  check_cmd->add_option("--suite,-s", check_args.suite, "weights, equivalence, oracle or trees")
      ->required()
      ->check(CLI::IsMember({"weights", "equivalence", "oracle", "trees"}));
  check_cmd->add_option("--max-edges,-e", check_args.max_edges, "Largest internal edge count")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--max-legs", check_args.max_legs, "Largest leg count")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--model,-m", check_args.model, "Model for the oracle suite");
  check_cmd->add_option("--max-order,-p", check_args.max_order, "Coupling order for the oracle suite")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--species", check_args.species, "Edge species count")->check(CLI::Range(1, 255));

  cli::TreesArgs trees_args;
  auto* trees_cmd = app.add_subcommand("trees", "List trees of minimal valence two (three with --modified)");
  trees_cmd->add_option("--vertices,-v", trees_args.vertices, "Vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  trees_cmd->add_option("--legs,-n", trees_args.legs, "External legs")->check(CLI::NonNegativeNumber);
  trees_cmd->add_flag("--modified", trees_args.modified, "Keep valence three and above");
  trees_cmd->add_option("--format", trees_args.format, "table, json or dot")->check(formats);

  cli::ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "Write a graph sum as JSON or DOT");
  export_cmd->add_option("--loops,-l", export_args.loops, "Loop number")->check(CLI::NonNegativeNumber);
  export_cmd->add_option("--vertices,-v", export_args.vertices, "Vertex count")->check(CLI::PositiveNumber);
  export_cmd->add_option("--legs,-n", export_args.legs, "External legs")->check(CLI::NonNegativeNumber);
  export_cmd->add_flag("--ordered", export_args.ordered, "Export the vertex-ordered sum");
  export_cmd->add_option("--species", export_args.species, "Edge species count")->check(CLI::Range(1, 255));
  export_cmd->add_option("--format", export_args.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_option("--input,-i", export_args.input, "Re-export a JSON graph sum")->check(CLI::ExistingFile);
  export_cmd->add_option("--output,-o", export_args.output, "Write to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  if (*enum_cmd) return cli::cmd_enum(enum_args, ctx, out, err);
  if (*eval_cmd) return cli::cmd_eval(eval_args, ctx, out, err);
  if (*check_cmd) return cli::cmd_check(check_args, ctx, out, err);
  if (*trees_cmd) return cli::cmd_trees(trees_args, ctx, out, err);
  return cli::cmd_export(export_args, ctx, out, err);
}
