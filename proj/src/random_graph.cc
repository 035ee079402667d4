#include "klsparse/random_graph.h"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace klsparse {

WeightedMultigraph RandomMultigraph(int n, int m, std::uint64_t seed,
                                    int max_weight) {
  if (m > 0 && n < 2) {
    throw std::invalid_argument("random edges need at least two vertices");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> first(0, n - 1);
  std::uniform_int_distribution<int> second(0, n - 2);
  std::uniform_int_distribution<int> weight(1, std::max(max_weight, 1));
  WeightedMultigraph g(n);
  for (int i = 0; i < m; ++i) {
    const int u = first(rng);
    int v = second(rng);
    if (v >= u) ++v;
    g.AddEdge(u, v, static_cast<double>(weight(rng)));
  }
  return g;
}

}  // namespace klsparse
