#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "klsparse/oracle.h"
#include "klsparse/pebble_game.h"
#include "test_util.h"

namespace klsparse {
namespace {

using namespace klsparse::testing;

TEST(SolveNaiveTest, CompleteGraphOnFour) {
  NaiveResult r = SolveNaive(Complete(4), {2, 3});
  EXPECT_EQ(r.accepted.size(), 5u);
}

TEST(SolveNaiveTest, SingleEdgeTree) {
  WeightedMultigraph g(2, {{0, 1}});
  EXPECT_EQ(SolveNaive(g, {1, 1}).accepted, (std::vector<int>{0}));
}

TEST(SolveNaiveTest, WeightedTriangle) {
  WeightedMultigraph g(3, {{0, 1, 5}, {1, 2, 3}, {0, 2, 1}});
  NaiveResult r = SolveNaive(g, {1, 1});
  EXPECT_EQ(r.accepted, (std::vector<int>{0, 1}));
  EXPECT_EQ(r.total_weight, 8.0);
}

TEST(SolveNaiveTest, NegativeEdgesSkipped) {
  WeightedMultigraph g(3, {{0, 1, -2}, {1, 2, 3}});
  EXPECT_EQ(SolveNaive(g, {1, 1}).accepted, (std::vector<int>{1}));
}

TEST(TryAcceptTest, EmptyOrientationAcceptsWithoutSearching) {
  Orientation d(4, 2);
  ReachabilitySearch search(4);
  AcceptStats stats;
  EXPECT_TRUE(TryAccept(d, 0, 3, {2, 3}, search, &stats));
  EXPECT_EQ(stats.searches, 0);
}

TEST(TryAcceptTest, MergeExampleClosingEdge) {
  Orientation d = MergeExampleOrientation();
  EXPECT_TRUE(TryAccept(d, 4, 2, {2, 3}));
  EXPECT_EQ(InsertArc(d, 4, 2), (Arc{4, 2}));
}

TEST(TryAcceptTest, RejectsEdgeCompletingCompleteGraph) {
  WeightedMultigraph g(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  NaiveResult r = SolveNaive(g, {2, 3});
  ASSERT_EQ(r.accepted.size(), 5u);
  g.AddEdge(0, 1);
  ASSERT_FALSE(DirectlySparse(g, {2, 3}, InputOrder(g)));
  EXPECT_FALSE(TryAccept(r.orientation, 0, 1, {2, 3}));
  EXPECT_EQ(Shadow(r.orientation.Arcs()), Shadow(g, r.accepted));
}

// Replays the naive game edge by edge and compares every verdict with the
// direct sparsity definition.
TEST(TryAcceptTest, VerdictMatchesDefinition) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    WeightedMultigraph g = RandomSmallGraph(rng, 8, 20, 1);
    for (const SparsityParams& p : AllParams(3)) {
      Orientation d(g.num_vertices(), p.k);
      ReachabilitySearch search(g.num_vertices());
      std::vector<int> accepted;
      for (int id = 0; id < g.num_edges(); ++id) {
        const Edge& e = g.edge(id);
        std::vector<int> candidate = accepted;
        candidate.push_back(id);
        AcceptStats stats;
        const bool ok = TryAccept(d, e.u, e.v, p, search, &stats);
        ASSERT_EQ(ok, DirectlySparse(g, p, candidate));
        ASSERT_LE(stats.searches, p.ell + 1);
        ASSERT_EQ(Shadow(d.Arcs()), Shadow(g, accepted));
        if (ok) {
          InsertArc(d, e.u, e.v);
          accepted.push_back(id);
        }
        ASSERT_TRUE(DirectlySparse(g, p, accepted));
        for (int v = 0; v < g.num_vertices(); ++v) ASSERT_LE(d.indegree(v), p.k);
      }
    }
  }
}

TEST(SolveNaiveTest, AgreesWithGreedyOracle) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 150; ++trial) {
    WeightedMultigraph g = RandomSmallGraph(rng, 8, 24, 4);
    for (const SparsityParams& p : AllParams(3)) {
      NaiveResult r = SolveNaive(g, p);
      ASSERT_EQ(r.accepted, oracle::SolveGreedy(g, p));
      EXPECT_LE(static_cast<long long>(r.accepted.size()),
                p.TightEdgeCount(g.num_vertices()));
      EXPECT_LE(r.counters.max_search_iterations, p.ell + 1);
    }
  }
}

}  // namespace
}  // namespace klsparse
