#ifndef KLSPARSE_RANDOM_GRAPH_H_
#define KLSPARSE_RANDOM_GRAPH_H_

#include <cstdint>

#include "klsparse/graph.h"

namespace klsparse {

// Erdos-Renyi style multigraph: each of the m edges draws an independent
// ordered endpoint pair uniformly among pairs of distinct vertices, so
// parallel edges occur. Weights are integers drawn uniformly from
// [1, max_weight]; max_weight <= 1 gives unit weights. The generator is
// std::mt19937_64 seeded with `seed`.
WeightedMultigraph RandomMultigraph(int n, int m, std::uint64_t seed,
                                    int max_weight = 1);

}  // namespace klsparse

#endif  // KLSPARSE_RANDOM_GRAPH_H_
