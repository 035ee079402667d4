#include "klsparse/oracle.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace klsparse::oracle {
namespace {

void CheckSize(const WeightedMultigraph& g, int limit) {
  if (g.num_vertices() > limit) {
    throw std::invalid_argument("oracle limited to " + std::to_string(limit) +
                                " vertices, got " +
                                std::to_string(g.num_vertices()));
  }
}

std::int64_t Limit(const SparsityParams& params, int size) {
  return std::max<std::int64_t>(std::int64_t{params.k} * size - params.ell, 0);
}

bool CountsAreSparse(const std::vector<std::uint32_t>& counts,
                     const SparsityParams& params) {
  for (std::size_t mask = 1; mask < counts.size(); ++mask) {
    if (counts[mask] > Limit(params, std::popcount(mask))) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> InducedEdgeCounts(const WeightedMultigraph& g) {
  CheckSize(g, kMaxVertices);
  const int n = g.num_vertices();
  std::vector<std::uint32_t> multiplicity(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    ++multiplicity[e.u * n + e.v];
    ++multiplicity[e.v * n + e.u];
  }
  // Grow each subset from the one missing its lowest vertex.
  std::vector<std::uint32_t> counts(std::size_t{1} << n, 0);
  for (std::size_t mask = 1; mask < counts.size(); ++mask) {
    const int low = std::countr_zero(mask);
    std::size_t rest = mask & (mask - 1);
    std::uint32_t added = 0;
    for (std::size_t bits = rest; bits != 0; bits &= bits - 1) {
      added += multiplicity[low * n + std::countr_zero(bits)];
    }
    counts[mask] = counts[rest] + added;
  }
  return counts;
}

bool IsSparse(const WeightedMultigraph& g, const SparsityParams& params) {
  params.Validate();
  return CountsAreSparse(InducedEdgeCounts(g), params);
}

bool IsTight(const WeightedMultigraph& g, const SparsityParams& params) {
  return IsSparse(g, params) &&
         g.num_edges() == params.TightEdgeCount(g.num_vertices());
}

bool IsSpanning(const WeightedMultigraph& g, const SparsityParams& params) {
  const std::vector<int> basis = SolveGreedy(g, params, InputOrder(g));
  return static_cast<long long>(basis.size()) ==
         params.TightEdgeCount(g.num_vertices());
}

std::vector<VertexList> EnumerateComponents(const WeightedMultigraph& g,
                                            const SparsityParams& params) {
  params.Validate();
  CheckSize(g, kMaxComponentVertices);
  const std::vector<std::uint32_t> counts = InducedEdgeCounts(g);
  if (!CountsAreSparse(counts, params)) {
    throw std::invalid_argument("component enumeration needs a sparse graph");
  }

  std::vector<std::uint32_t> blocks;
  for (std::size_t mask = 1; mask < counts.size(); ++mask) {
    if (counts[mask] == Limit(params, std::popcount(mask))) {
      blocks.push_back(static_cast<std::uint32_t>(mask));
    }
  }
  std::stable_sort(blocks.begin(), blocks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t block : blocks) {
    const bool covered = std::any_of(maximal.begin(), maximal.end(), [&](std::uint32_t m) {
      return (block & ~m) == 0;
    });
    if (!covered) maximal.push_back(block);
  }

  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      if (std::popcount(maximal[i] & maximal[j]) > 1) {
        throw std::logic_error("components overlap in more than one vertex");
      }
    }
  }

  std::vector<VertexList> components;
  for (std::uint32_t mask : maximal) {
    VertexList members;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      members.push_back(std::countr_zero(bits));
    }
    components.push_back(std::move(members));
  }
  std::sort(components.begin(), components.end());
  return components;
}

std::vector<int> SolveGreedy(const WeightedMultigraph& g,
                             const SparsityParams& params,
                             std::span<const int> order) {
  params.Validate();
  CheckSize(g, kMaxVertices);
  const std::size_t subsets = std::size_t{1} << g.num_vertices();
  std::vector<std::uint32_t> counts(subsets, 0);
  std::vector<int> accepted;
  for (int id : order) {
    const Edge& e = g.edge(id);
    const std::size_t both = (std::size_t{1} << e.u) | (std::size_t{1} << e.v);
    bool independent = true;
    for (std::size_t mask = both; mask < subsets && independent; ++mask) {
      if ((mask & both) != both) continue;
      independent = counts[mask] + 1 <= Limit(params, std::popcount(mask));
    }
    if (!independent) continue;
    for (std::size_t mask = both; mask < subsets; ++mask) {
      if ((mask & both) == both) ++counts[mask];
    }
    accepted.push_back(id);
  }
  return accepted;
}

std::vector<int> SolveGreedy(const WeightedMultigraph& g,
                             const SparsityParams& params) {
  return SolveGreedy(g, params, WeightedOrder(g));
}

WeightedMultigraph EdgeSubgraph(const WeightedMultigraph& g,
                                std::span<const int> edge_ids) {
  WeightedMultigraph sub(g.num_vertices());
  for (int id : edge_ids) {
    const Edge& e = g.edge(id);
    sub.AddEdge(e.u, e.v, e.weight);
  }
  return sub;
}

}  // namespace klsparse::oracle
