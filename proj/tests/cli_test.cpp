#include <gtest/gtest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace ssc::cli {
namespace {

using test::data_path;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& text) {
  std::string path = std::string(SSC_BUILD_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const std::string kCircuitA = data_path("circuit_A.txt");
const std::string kCircuitB = data_path("circuit_B.txt");
const std::string kNetA = data_path("network_A.txt");
const std::string kNetB = data_path("network_B.txt");

TEST(Cli, CheckCircuit) {
  auto r = run_args({"check", kCircuitA, kCircuitB});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "verdict: controllable\n"));
  EXPECT_TRUE(has(r.out, "  node 5 colors 2\n  node 2 colors 3\n  node 3 colors 1\n"));
}

TEST(Cli, CheckNetwork) {
  auto r = run_args({"check", kNetA, kNetB});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "verdict: not controllable\n"));
  EXPECT_TRUE(has(r.out, "witness: lambda = "));
  auto up = run_args({"check", data_path("network_upgraded_AB.txt")});
  EXPECT_EQ(up.code, 0);
}

TEST(Cli, CombinedFileMatchesSeparateFiles) {
  auto combined = scratch("circuit_AB.txt", "* 0 * | * 0\n0 0 * | 0 *\n? * * | ? 0\n");
  EXPECT_EQ(run_args({"check", combined, "--format", "json"}).out,
            run_args({"check", kCircuitA, kCircuitB, "--format", "json"}).out);
}

TEST(Cli, InputErrors) {
  auto ragged = run_args({"check", data_path("ragged.txt"), kCircuitB});
  EXPECT_EQ(ragged.code, 2);
  EXPECT_TRUE(has(ragged.err, "ragged.txt:3:2: RaggedRows"));
  auto bad = scratch("bad_token.txt", "* 0\n0 x\n");
  auto token = run_args({"colorable", bad});
  EXPECT_EQ(token.code, 2);
  EXPECT_TRUE(has(token.err, "bad_token.txt:2:2: BadToken"));
  EXPECT_EQ(run_args({"check", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run_args({"check", kCircuitA, data_path("graph_4x6.txt")}).code, 2);
  auto tall = scratch("tall.txt", "*\n*\n");
  auto wide = run_args({"colorable", tall});
  EXPECT_EQ(wide.code, 2);
  EXPECT_TRUE(has(wide.err, "WideMatrixRequired"));
  EXPECT_EQ(run_args({"oracle", kCircuitA, kCircuitB, "--trials", "0"}).code, 2);
  EXPECT_EQ(run_args({"oracle", kCircuitA, kCircuitB, "--values", "1,x"}).code, 2);
  EXPECT_EQ(run_args({"check", kCircuitA, "--format", "xml"}).code, 2);
  EXPECT_EQ(run_args({"frobnicate"}).code, 2);
  EXPECT_EQ(run_args({}).code, 2);
  EXPECT_EQ(run_args({"net", "--sweep", "9"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  auto r = run_args({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "check"));
}

TEST(Cli, Colorable) {
  auto m46 = run_args({"colorable", data_path("graph_4x6.txt")});
  EXPECT_EQ(m46.code, 0);
  EXPECT_TRUE(has(m46.out,
                  "  node 5 colors 1\n  node 6 colors 2\n  node 1 colors 3\n"
                  "  node 3 colors 4\ncolorable: yes\n"));
  auto q = scratch("q.txt", "?\n");
  auto r = run_args({"colorable", q});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "rank witness:"));
}

TEST(Cli, DotOutput) {
  auto r = run_args({"colorable", data_path("graph_4x5.txt"), "--format", "dot"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("digraph G {\n", 0), 0u);
  EXPECT_TRUE(has(r.out, "  3 -> 3 [style=dashed];\n"));
  std::string path = std::string(SSC_BUILD_DIR) + "/m46.dot";
  std::remove(path.c_str());
  auto w = run_args({"colorable", data_path("graph_4x6.txt"), "--dot", path});
  EXPECT_EQ(w.code, 0);
  auto text = test::read_text(path);
  EXPECT_TRUE(has(text, "4 [style=filled, fillcolor=black, fontcolor=white];"));
  auto both = run_args({"check", kCircuitA, kCircuitB, "--format", "dot"});
  std::size_t graphs = 0;
  for (std::size_t pos = 0; (pos = both.out.find("digraph G {", pos)) != std::string::npos; ++pos)
    ++graphs;
  EXPECT_EQ(graphs, 2u);
}

TEST(Cli, CheckJsonSchema) {
  auto r = run_args({"check", kNetA, kNetB, "--format", "json"});
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], false);
  EXPECT_EQ(j["condition1"], true);
  EXPECT_EQ(j["condition2"], false);
  EXPECT_EQ(j["shortcut_used"], false);
  EXPECT_TRUE(j["trace1"]["changes"].is_array());
  EXPECT_TRUE(j["witness"]["A0"].is_array());
  EXPECT_TRUE(j["lambda"].is_string());
  EXPECT_EQ(j["A"], nlohmann::json({"*0*", "?*0", "0*0"}));
  for (const auto& row : j["witness"]["B0"])
    for (const auto& v : row) EXPECT_NE(v.get<std::string>().find('/'), std::string::npos);
  EXPECT_EQ(r.out, run_args({"check", kNetA, kNetB, "--format", "json"}).out);
}

TEST(Cli, ShortcutAndFullTraces) {
  auto s = scratch("diag_AB.txt", "* * | *\n0 ? | 0\n");
  auto plain = nlohmann::json::parse(run_args({"check", s, "--format", "json"}).out);
  auto full = nlohmann::json::parse(run_args({"check", s, "--format", "json", "--full"}).out);
  if (plain["shortcut_used"] == true) {
    EXPECT_TRUE(plain["trace1"].is_null());
    EXPECT_FALSE(full["trace1"].is_null());
  }
  EXPECT_EQ(plain["verdict"], full["verdict"]);
}

TEST(Cli, Oracle) {
  auto c = run_args({"oracle", kCircuitA, kCircuitB, "--trials", "200"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(has(c.out, "oracle agrees: yes"));
  auto n = run_args({"oracle", kNetA, kNetB, "--format", "json", "--seed", "4"});
  EXPECT_EQ(n.code, 0);
  auto j = nlohmann::json::parse(n.out);
  EXPECT_EQ(j["agrees"], true);
  EXPECT_EQ(j["monte_carlo"]["mode"], "monte_carlo");
  EXPECT_TRUE(j["monte_carlo"]["counterexample"].is_object());
  EXPECT_EQ(j["exhaustive"]["mode"], "exhaustive");
  auto custom = run_args({"oracle", kNetA, kNetB, "--values", "-1,1"});
  EXPECT_EQ(custom.code, 0);
  EXPECT_EQ(n.out, run_args({"oracle", kNetA, kNetB, "--format", "json", "--seed", "4"}).out);
}

TEST(Cli, Net) {
  auto ex = run_args({"net", data_path("network_example.net")});
  EXPECT_EQ(ex.code, 1);
  EXPECT_TRUE(has(ex.out, "false    false  yes"));
  auto link = run_args({"net", data_path("network_example_with_link.net")});
  EXPECT_EQ(link.code, 0);
  auto path = run_args({"net", data_path("path3.net"), "--format", "json"});
  EXPECT_EQ(path.code, 0);
  auto j = nlohmann::json::parse(path.out);
  EXPECT_EQ(j["family"], "qdiag");
  EXPECT_EQ(j["pattern_verdict"], true);
  EXPECT_EQ(j["mzc"], true);
  auto loops = scratch("loops.net", "leaders: 1\nloops: forbidden\n1 1\n");
  EXPECT_EQ(run_args({"net", loops}).code, 2);
  auto sweep = run_args({"net", "--sweep", "3"});
  EXPECT_EQ(sweep.code, 0);
  EXPECT_TRUE(has(sweep.out, "total mismatches: 0"));
  EXPECT_EQ(run_args({"net"}).code, 2);
}

TEST(Cli, Weak) {
  EXPECT_EQ(run_args({"weak", kNetA, kNetB}).code, 0);
  EXPECT_EQ(run_args({"weak", kCircuitA, kCircuitB}).code, 0);
  auto zero = scratch("zero_B.txt", "0\n0\n0\n");
  EXPECT_EQ(run_args({"weak", kNetA, zero}).code, 1);
}

TEST(Cli, SweepHelper) {
  for (const auto& row : sweep_networks(2)) EXPECT_EQ(row.mismatches, 0u);
}

}  // namespace
}  // namespace ssc::cli
