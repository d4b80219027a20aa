#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "hopfgraph/graph_io.hpp"
#include "hopfgraph/model.hpp"

namespace hopfgraph::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

template <class Args, class Fn>
Outcome run(Fn fn, const Args& args, Context ctx = {}) {
  std::ostringstream out, err;
  int code = fn(args, ctx, out, err);
  return {code, out.str(), err.str()};
}

std::string model_path(const char* name) { return std::string(HOPFGRAPH_MODELS_DIR) + "/" + name; }

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

TEST(CliEnum, SingleEdgeTable) {
  Outcome r = run(cmd_enum, EnumArgs{.loops = 0, .vertices = 2});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "#  graph                  weight  S  weight*S=1\n"
            "1  v=2 legs[] edges[1-2]  1/2     2  ✓\n"
            "terms: 1  total weight: 1/2\n");
}

TEST(CliEnum, IdentityOnOneVertex) {
  Outcome r = run(cmd_enum, EnumArgs{.loops = 0, .vertices = 1, .legs = 3});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("terms: 1  total weight: 1\n"), std::string::npos);
}

TEST(CliEnum, OneLoopTwoVertices) {
  Outcome r = run(cmd_enum, EnumArgs{.loops = 1, .vertices = 2});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("edges[1-1 1-2]  1/2     2  ✓"), std::string::npos);
  EXPECT_NE(r.out.find("edges[1-2 1-2]  1/4     4  ✓"), std::string::npos);
  EXPECT_EQ(count_lines(r.out), 4);
}

TEST(CliEnum, JsonLinesWithSummary) {
  Outcome r = run(cmd_enum, EnumArgs{.loops = 1, .vertices = 2, .format = "json"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(count_lines(r.out), 3);
  EXPECT_NE(r.out.find("{\"summary\":{\"terms\":2,\"total_weight\":\"3/4\"}}\n"), std::string::npos);
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  EXPECT_NO_THROW(graph_sum_from_json("{\"terms\":[" + first + "]}"));
}

TEST(CliEnum, OrderedSum) {
  Outcome r = run(cmd_enum, EnumArgs{.loops = 1, .vertices = 2, .ordered = true});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("terms: 3  total weight: 3/4"), std::string::npos);
}

TEST(CliEnum, GuardAndBadArguments) {
  EXPECT_EQ(run(cmd_enum, EnumArgs{.loops = 6, .vertices = 6}).code, kGuard);
  EXPECT_EQ(run(cmd_enum, EnumArgs{.loops = 2, .vertices = 2}, Context{.edge_limit = 2}).code, kGuard);
  EXPECT_EQ(run(cmd_enum, EnumArgs{.loops = 0, .vertices = 0}).code, kUsage);
  EXPECT_EQ(run(cmd_enum, EnumArgs{.loops = 0, .vertices = 1, .format = "xml"}).code, kUsage);
  EXPECT_EQ(run(cmd_enum, EnumArgs{.loops = 0, .vertices = 1, .species = 0}).code, kUsage);
}

TEST(CliEval, FreePropagator) {
  Outcome r = run(cmd_eval, EvalArgs{.model = model_path("phi3.model"), .legs = 2, .max_order = 0});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "g^0: 1\n");
}

TEST(CliEval, OnePointFlag) {
  EvalArgs args{.model = model_path("phi3.model"), .legs = 1, .max_order = 4};
  Outcome keep = run(cmd_eval, args);
  ASSERT_EQ(keep.code, kOk);
  EXPECT_EQ(keep.out, "g^1: 1/2\ng^3: 5/8\n");
  args.one_point = "vanish";
  Outcome vanish = run(cmd_eval, args);
  ASSERT_EQ(vanish.code, kOk);
  EXPECT_EQ(vanish.out, "0\n");
  args.one_point = "sometimes";
  EXPECT_EQ(run(cmd_eval, args).code, kUsage);
}

TEST(CliEval, PhiFourPerLoop) {
  Outcome r = run(cmd_eval, EvalArgs{.model = model_path("phi4.model"), .legs = 4, .max_order = 1, .per_loop = true});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "loops 0 vertices 1:\n  g^1: 1\ntotal:\ng^1: 1\n");
}

TEST(CliEval, Errors) {
  EXPECT_EQ(run(cmd_eval, EvalArgs{.model = "/nonexistent.model", .legs = 2}).code, kUsage);
  auto bad = std::filesystem::temp_directory_path() / "hopfgraph_bad.model";
  std::ofstream(bad) << "species 1\ncoupling 3 = g +\n";
  Outcome r = run(cmd_eval, EvalArgs{.model = bad.string(), .legs = 2});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run(cmd_eval, EvalArgs{.model = model_path("phi3.model"), .legs = 2, .max_order = 12}).code, kGuard);
}

TEST(CliCheck, SuitesPass) {
  EXPECT_EQ(run(cmd_check, CheckArgs{.suite = "weights", .max_edges = 5}).code, kOk);
  EXPECT_EQ(run(cmd_check, CheckArgs{.suite = "equivalence", .max_edges = 4}).code, kOk);
  EXPECT_EQ(run(cmd_check, CheckArgs{.suite = "oracle"}).code, kOk);
  EXPECT_EQ(run(cmd_check, CheckArgs{.suite = "trees"}).code, kOk);
  EXPECT_EQ(run(cmd_check, CheckArgs{.suite = "oracle", .model = model_path("phi4.model")}).code, kOk);
  EXPECT_EQ(run(cmd_check, CheckArgs{.suite = "weights", .max_edges = 3, .species = 2}).code, kOk);
}

TEST(CliCheck, BadFlags) {
  EXPECT_EQ(run(cmd_check, CheckArgs{.suite = "nope"}).code, kUsage);
  EXPECT_EQ(run(cmd_check, CheckArgs{.suite = "weights", .max_edges = -1}).code, kUsage);
  EXPECT_EQ(run(cmd_check, CheckArgs{.suite = "weights", .max_edges = 11}).code, kGuard);
}

TEST(CliCheck, BundledModelMatchesFile) {
  std::ifstream in(model_path("phi3.model"));
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), bundled_phi3_model());
  EXPECT_NO_THROW(parse_model(bundled_phi3_model()));
}

TEST(CliTrees, Examples) {
  Outcome one = run(cmd_trees, TreesArgs{.vertices = 1, .legs = 3});
  ASSERT_EQ(one.code, kOk);
  EXPECT_NE(one.out.find("terms: 1  total weight: 1\n"), std::string::npos);

  Outcome two = run(cmd_trees, TreesArgs{.vertices = 2, .legs = 4});
  ASSERT_EQ(two.code, kOk);
  EXPECT_NE(two.out.find("terms: 7  total weight: 7\n"), std::string::npos);

  Outcome modified = run(cmd_trees, TreesArgs{.vertices = 2, .legs = 3, .modified = true});
  ASSERT_EQ(modified.code, kOk);
  EXPECT_NE(modified.out.find("terms: 0  total weight: 0\n"), std::string::npos);

  EXPECT_EQ(run(cmd_trees, TreesArgs{.vertices = 0}).code, kUsage);
}

TEST(CliExport, JsonRoundTrip) {
  auto dir = std::filesystem::temp_directory_path();
  auto first = (dir / "hopfgraph_export_a.json").string();
  ExportArgs args{.loops = 1, .vertices = 3, .legs = 2, .output = first};
  ASSERT_EQ(run(cmd_export, args).code, kOk);
  Outcome again = run(cmd_export, ExportArgs{.input = first});
  ASSERT_EQ(again.code, kOk);
  std::ifstream in(first);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(again.out, text.str());
  EXPECT_EQ(graph_sum_from_json(text.str()), graph_sum_from_json(again.out));
}

TEST(CliExport, Dot) {
  Outcome r = run(cmd_export, ExportArgs{.loops = 0, .vertices = 2, .format = "dot"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("v1 -- v2;"), std::string::npos);
  EXPECT_EQ(run(cmd_export, ExportArgs{.format = "table"}).code, kUsage);
  EXPECT_EQ(run(cmd_export, ExportArgs{.input = "/nonexistent.json"}).code, kUsage);
}

TEST(CliDeterminism, RepeatedRunsAndThreads) {
  EnumArgs args{.loops = 2, .vertices = 3, .legs = 2, .format = "json"};
  Outcome a = run(cmd_enum, args);
  Outcome b = run(cmd_enum, args);
  Outcome c = run(cmd_enum, args, Context{.threads = 4});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  args.ordered = true;
  EXPECT_EQ(run(cmd_enum, args).out, run(cmd_enum, args, Context{.threads = 3}).out);
}

}  // namespace
}  // namespace hopfgraph::cli
