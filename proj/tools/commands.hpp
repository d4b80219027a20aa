#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace hopfgraph::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kGuard = 3 };

struct Context {
  int edge_limit = 10;  // resource guard on internal edges
  unsigned threads = 1;
};

struct EnumArgs {
  int loops = 0;
  int vertices = 1;
  int legs = 0;
  bool ordered = false;
  int species = 1;
  std::string format = "table";  // table | json | dot
};

struct EvalArgs {
  std::string model;
  int legs = 0;
  int max_order = 0;
  bool per_loop = false;
  int leg_species = 1;
  std::string one_point;  // empty: the model's flag
};

struct CheckArgs {
  std::string suite;  // weights | equivalence | oracle | trees
  std::optional<int> max_edges;
  std::optional<int> max_legs;
  std::string model;  // oracle suite; empty: bundled x^3 model
  int max_order = 4;
  int species = 1;
};

struct TreesArgs {
  int vertices = 1;
  int legs = 0;
  bool modified = false;
  std::string format = "table";
};

struct ExportArgs {
  int loops = 0;
  int vertices = 1;
  int legs = 0;
  bool ordered = false;
  int species = 1;
  std::string format = "json";  // json | dot
  std::string input;            // re-export a JSON graph sum instead of generating
  std::string output;           // file instead of stdout
};

int cmd_enum(const EnumArgs& args, const Context& ctx, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalArgs& args, const Context& ctx, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, const Context& ctx, std::ostream& out, std::ostream& err);
int cmd_trees(const TreesArgs& args, const Context& ctx, std::ostream& out, std::ostream& err);
int cmd_export(const ExportArgs& args, const Context& ctx, std::ostream& out, std::ostream& err);

// Text of the model used by `check --suite oracle` when no file is given.
const char* bundled_phi3_model();

}  // namespace hopfgraph::cli
