#include "klsparse/oracle.h"

#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace klsparse {
namespace {

using namespace klsparse::testing;

const SparsityParams kLaman{2, 3};

TEST(IsSparseTest, CompleteGraphOnFourIsNotLamanSparse) {
  EXPECT_FALSE(oracle::IsSparse(Complete(4), kLaman));
}

TEST(IsSparseTest, CompleteGraphMinusEdgeIsSparse) {
  WeightedMultigraph g(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(oracle::IsSparse(g, kLaman));
}

TEST(IsSparseTest, EmptyGraphAlwaysSparse) {
  for (const SparsityParams& p : AllParams(3)) {
    EXPECT_TRUE(oracle::IsSparse(WeightedMultigraph(6), p));
  }
}

TEST(IsSparseTest, MatchesDirectDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    WeightedMultigraph g = RandomSmallGraph(rng, 7, 14, 3);
    for (const SparsityParams& p : AllParams(3)) {
      ASSERT_EQ(oracle::IsSparse(g, p),
                DirectlySparse(g, p, InputOrder(g)));
    }
  }
}

TEST(IsSparseTest, VertexGuard) {
  EXPECT_THROW(oracle::IsSparse(WeightedMultigraph(21), kLaman),
               std::invalid_argument);
  EXPECT_THROW(oracle::EnumerateComponents(WeightedMultigraph(17), kLaman),
               std::invalid_argument);
}

TEST(IsTightTest, Examples) {
  EXPECT_TRUE(oracle::IsTight(Complete(3), kLaman));
  EXPECT_TRUE(oracle::IsTight(QuadWithTriangles(true), kLaman));
  EXPECT_FALSE(oracle::IsTight(QuadWithTriangles(false), kLaman));

  WeightedMultigraph k4 = Complete(4);
  EXPECT_FALSE(oracle::IsSparse(k4, kLaman));
  EXPECT_FALSE(oracle::IsTight(k4, kLaman));
  EXPECT_TRUE(oracle::IsSpanning(k4, kLaman));
  EXPECT_FALSE(oracle::IsSpanning(QuadWithTriangles(false), kLaman));
}

TEST(EnumerateComponentsTest, MergeExampleBeforeInsertion) {
  std::vector<VertexList> expected = {{0, 1, 2}, {1, 3, 4}, {1, 5}, {3, 6, 7}};
  EXPECT_EQ(oracle::EnumerateComponents(MergeExample(false), kLaman), expected);
}

TEST(EnumerateComponentsTest, TwoEdgePathIsOneTreeComponent) {
  WeightedMultigraph path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(oracle::EnumerateComponents(path, {1, 1}),
            (std::vector<VertexList>{{0, 1, 2}}));
}

TEST(EnumerateComponentsTest, Singletons) {
  const WeightedMultigraph one(1);
  EXPECT_EQ(oracle::EnumerateComponents(one, {1, 1}),
            (std::vector<VertexList>{{0}}));
  EXPECT_EQ(oracle::EnumerateComponents(one, {2, 3}),
            (std::vector<VertexList>{{0}}));
  EXPECT_TRUE(oracle::EnumerateComponents(one, {2, 1}).empty());
}

TEST(EnumerateComponentsTest, RejectsNonSparse) {
  EXPECT_THROW(oracle::EnumerateComponents(Complete(4), kLaman),
               std::invalid_argument);
}

TEST(EnumerateComponentsTest, StructuralProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    WeightedMultigraph g = RandomSmallGraph(rng, 8, 20, 1);
    for (const SparsityParams& p : AllParams(3)) {
      WeightedMultigraph sparse = oracle::EdgeSubgraph(g, oracle::SolveGreedy(g, p));
      std::vector<VertexList> comps = oracle::EnumerateComponents(sparse, p);
      for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
          const int common = IntersectionSize(comps[i], comps[j]);
          EXPECT_LE(common, 1);
          if (p.ell <= p.k) {
            EXPECT_EQ(common, 0);
          }
        }
      }
    }
  }
}

TEST(EnumerateComponentsTest, OverlappingBlocksCloseUnderUnionAndIntersection) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    WeightedMultigraph g = RandomSmallGraph(rng, 7, 18, 1);
    for (const SparsityParams& p : AllParams(2)) {
      WeightedMultigraph sparse = oracle::EdgeSubgraph(g, oracle::SolveGreedy(g, p));
      std::vector<std::uint32_t> counts = oracle::InducedEdgeCounts(sparse);
      auto is_block = [&](std::uint32_t mask) {
        const long long size = std::popcount(mask);
        return mask != 0 &&
               counts[mask] == std::max<long long>(p.k * size - p.ell, 0);
      };
      std::vector<std::uint32_t> blocks;
      for (std::uint32_t mask = 1; mask < counts.size(); ++mask) {
        if (is_block(mask)) blocks.push_back(mask);
      }
      for (std::uint32_t x : blocks) {
        for (std::uint32_t y : blocks) {
          if (std::popcount(x & y) < 2) continue;
          ++checked;
          EXPECT_TRUE(is_block(x & y));
          EXPECT_TRUE(is_block(x | y));
        }
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(SolveGreedyTest, CompleteGraphOnFour) {
  // Brute force over all 64 edge subsets gives 5.
  WeightedMultigraph k4 = Complete(4);
  ASSERT_EQ(BruteForceRank(k4, kLaman), 5);
  EXPECT_EQ(oracle::SolveGreedy(k4, kLaman).size(), 5u);
}

TEST(SolveGreedyTest, WeightedTriangleSpanningTree) {
  WeightedMultigraph g(3, {{0, 1, 5}, {1, 2, 3}, {0, 2, 1}});
  ASSERT_EQ(MaximumSpanningForestWeight(g), 8.0);
  std::vector<int> accepted = oracle::SolveGreedy(g, {1, 1});
  EXPECT_EQ(accepted, (std::vector<int>{0, 1}));
  EXPECT_EQ(TotalWeight(g, accepted), 8.0);
}

TEST(SolveGreedyTest, RankMatchesExhaustiveSubsetSearch) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedMultigraph g = RandomSmallGraph(rng, 6, 10, 1);
    for (const SparsityParams& p : AllParams(3)) {
      ASSERT_EQ(static_cast<int>(oracle::SolveGreedy(g, p).size()),
                BruteForceRank(g, p));
    }
  }
}

TEST(SolveGreedyTest, TreeCaseMatchesKruskal) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    WeightedMultigraph g = RandomSmallGraph(rng, 12, 40, 50);
    EXPECT_EQ(TotalWeight(g, oracle::SolveGreedy(g, {1, 1})),
              MaximumSpanningForestWeight(g));
  }
}

TEST(SolveGreedyTest, PseudoforestCase) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    WeightedMultigraph g = RandomSmallGraph(rng, 10, 30, 20);
    std::vector<int> accepted = oracle::SolveGreedy(g, {1, 0});
    for (auto [vertices, edges] : ComponentSizes(g, accepted)) {
      EXPECT_LE(edges, vertices);  // at most one cycle
    }
  }
}

}  // namespace
}  // namespace klsparse
