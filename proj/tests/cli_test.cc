#include "klsparse/cli.h"

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "klsparse/bench.h"
#include "klsparse/edge_list_io.h"
#include "klsparse/run.h"
#include "json.hpp"
#include "test_util.h"

namespace klsparse {
namespace {

using namespace klsparse::testing;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunTool(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCommandLine(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string DataFile(const std::string& name) {
  return std::string(KLSPARSE_TEST_DATA) + "/" + name;
}

TEST(ParseEdgeListTest, CommentsBlankLinesAndWeights) {
  WeightedMultigraph g = ParseEdgeList("# header\n\n3 2\n0 1 2.5\n# mid\n1 2\n");
  EXPECT_EQ(g.num_vertices(), 3);
  ASSERT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.edge(0).weight, 2.5);
  EXPECT_EQ(g.edge(1).weight, 1.0);
}

TEST(ParseEdgeListTest, ErrorsNameTheLine) {
  const std::pair<const char*, int> cases[] = {
      {"3 1\n0 0\n", 2},            // loop
      {"3 1\n0 3\n", 2},            // out of range
      {"3 2\n0 1\n", 2},            // missing edge
      {"3 1\n0 1\n1 2\n", 3},       // extra edge
      {"3 1\n0 1 nan\n", 2},        // weight not finite
      {"3\n", 1},                   // bad header
      {"3 1\n# c\n0 x\n", 3},       // not a number
  };
  for (auto [text, line] : cases) {
    try {
      ParseEdgeList(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
      EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)),
                std::string::npos);
    }
  }
}

TEST(ParseEdgeListTest, RoundTrip) {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> real(-5.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    WeightedMultigraph g = RandomSmallGraph(rng, 12, 30, 1);
    WeightedMultigraph h(g.num_vertices());
    for (const Edge& e : g.edges()) h.AddEdge(e.u, e.v, real(rng));
    WeightedMultigraph back = ParseEdgeList(SerializeEdgeList(h));
    ASSERT_EQ(back.num_vertices(), h.num_vertices());
    ASSERT_EQ(back.num_edges(), h.num_edges());
    for (int i = 0; i < h.num_edges(); ++i) {
      EXPECT_EQ(back.edge(i).u, h.edge(i).u);
      EXPECT_EQ(back.edge(i).v, h.edge(i).v);
      EXPECT_EQ(back.edge(i).weight, h.edge(i).weight);
    }
  }
}

TEST(CliTest, MergeExampleComponents) {
  Outcome o = RunTool({DataFile("merge_example.txt"), "--components"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("accepted: 11\n"), std::string::npos);
  EXPECT_NE(o.out.find("components: 3\n"
                       "component: 0 1 2 3 4\n"
                       "component: 1 5\n"
                       "component: 3 6 7\n"),
            std::string::npos)
      << o.out;
}

TEST(CliTest, TightCheck) {
  Outcome o = RunTool({DataFile("quad_triangles.txt"), "--check", "tight"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out, "tight: yes\n");
  o = RunTool({DataFile("merge_example.txt"), "--check", "tight"});
  EXPECT_EQ(o.out, "tight: no\n");
  o = RunTool({DataFile("merge_example.txt"), "--check", "sparse", "--algorithm", "oracle"});
  EXPECT_EQ(o.out, "sparse: yes\n");
}

TEST(CliTest, EmptyGraph) {
  Outcome o = RunTool({DataFile("empty5.txt")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("accepted: 0\ntotal_weight: 0\n"), std::string::npos)
      << o.out;
}

TEST(CliTest, ReadsStdin) {
  Outcome o = RunTool({"--k", "1", "--ell", "1"}, "3 3\n0 1 5\n1 2 3\n0 2 1\n");
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("total_weight: 8\n"), std::string::npos) << o.out;
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(RunTool({"-"}, "2 1\n0 0\n").code, kExitParseError);
  EXPECT_EQ(RunTool({"--k", "2", "--ell", "4"}, "2 0\n").code, kExitConfigError);
  EXPECT_EQ(RunTool({"--k", "2", "--ell", "3", "--tracker", "disjoint"}, "2 0\n").code,
            kExitConfigError);
  EXPECT_EQ(RunTool({"--tracker", "unweighted"}, "3 2\n0 1 3\n1 2 1\n").code,
            kExitConfigError);
  EXPECT_EQ(RunTool({"--tracker", "unweighted", "--unweighted"}, "2 1\n0 1 3\n").code,
            kExitOk);
  EXPECT_EQ(RunTool({"--algorithm", "naive", "--components"}, "2 0\n").code,
            kExitConfigError);
  EXPECT_EQ(RunTool({"--algorithm", "bogus"}, "2 0\n").code, kExitConfigError);
  EXPECT_EQ(RunTool({"/nonexistent/graph.txt"}).code, kExitIoError);
  EXPECT_EQ(RunTool({"--help"}).code, kExitOk);
}

TEST(CliTest, JsonMirrorsText) {
  Outcome o = RunTool({DataFile("merge_example.txt"), "--components", "--stats", "--json"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  nlohmann::json j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["accepted"], 11);
  EXPECT_EQ(j["edges"].size(), 11u);
  EXPECT_EQ(j["components"].size(), 3u);
  EXPECT_EQ(j["total_weight"], 11.0);
  EXPECT_EQ(j["stats"]["tracker"], "general");
}

// The oracle and the component game report identical text on small inputs.
TEST(CliTest, OracleMatchesComponentOutput) {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedMultigraph g = RandomSmallGraph(rng, 8, 20, 3);
    for (const SparsityParams& p : AllParams(3)) {
      RunConfig config;
      config.params = p;
      config.components = true;
      config.algorithm = Algorithm::kComponent;
      const std::string component = FormatText(config, Execute(config, g));
      config.algorithm = Algorithm::kOracle;
      const std::string oracle = FormatText(config, Execute(config, g));
      ASSERT_EQ(component, oracle);
    }
  }
}

TEST(BenchTest, ProducesRows) {
  Outcome o = RunTool({"--bench", "--sizes", "50,100", "--density", "4"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("n,m,k,ell,algorithm,tracker,", 0), 0u);
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 4);
}

TEST(BenchTest, NaiveAndComponentAgree) {
  BenchConfig config;
  config.sizes = {200};
  std::vector<BenchRow> rows = RunBench(config);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].m, 1600);
  EXPECT_EQ(rows[0].accepted, rows[1].accepted);
  EXPECT_EQ(rows[0].accepted, 2 * 200 - 3);
}

}  // namespace
}  // namespace klsparse
