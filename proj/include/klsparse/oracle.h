#ifndef KLSPARSE_ORACLE_H_
#define KLSPARSE_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "klsparse/component_tracker.h"
#include "klsparse/graph.h"

// Brute-force reference answers by enumerating all 2^n vertex subsets. Only
// meant for small graphs; the vertex limits below are enforced with
// std::invalid_argument.
namespace klsparse::oracle {

inline constexpr int kMaxVertices = 20;
inline constexpr int kMaxComponentVertices = 16;

// counts[X] = number of edges with both endpoints in X, indexed by the
// bitmask of X.
std::vector<std::uint32_t> InducedEdgeCounts(const WeightedMultigraph& g);

bool IsSparse(const WeightedMultigraph& g, const SparsityParams& params);
bool IsTight(const WeightedMultigraph& g, const SparsityParams& params);
bool IsSpanning(const WeightedMultigraph& g, const SparsityParams& params);

// Inclusion-maximal (k, ell)-blocks of a sparse graph, each sorted, the list
// sorted lexicographically. Throws std::invalid_argument on a non-sparse
// graph.
std::vector<VertexList> EnumerateComponents(const WeightedMultigraph& g,
                                            const SparsityParams& params);

// Matroid greedy: scan the edges in `order` and keep each one whose addition
// leaves the kept set sparse.
std::vector<int> SolveGreedy(const WeightedMultigraph& g,
                             const SparsityParams& params,
                             std::span<const int> order);
// Same, in WeightedOrder(g).
std::vector<int> SolveGreedy(const WeightedMultigraph& g,
                             const SparsityParams& params);

// The subgraph on the same vertex set made of the given edges, in that order.
WeightedMultigraph EdgeSubgraph(const WeightedMultigraph& g,
                                std::span<const int> edge_ids);

}  // namespace klsparse::oracle

#endif  // KLSPARSE_ORACLE_H_
