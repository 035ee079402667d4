#ifndef KLSPARSE_GRAPH_H_
#define KLSPARSE_GRAPH_H_

#include <span>
#include <vector>

namespace klsparse {

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

// Loopless multigraph on vertices 0..n-1. Parallel edges are kept as
// separate entries; edge ids are positions in the input sequence.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;
  explicit WeightedMultigraph(int num_vertices);
  WeightedMultigraph(int num_vertices, std::vector<Edge> edges);

  // Throws std::invalid_argument on a loop or an out-of-range endpoint.
  int AddEdge(int u, int v, double weight = 1.0);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool HasUniformWeights() const;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

// Sparsity parameters with 0 <= ell < 2k.
struct SparsityParams {
  int k = 2;
  int ell = 3;

  bool valid() const { return ell >= 0 && ell < 2 * k; }
  // Throws std::invalid_argument unless valid().
  void Validate() const;

  // 2k - ell: the indegree-sum threshold an edge's endpoints must stay below.
  int threshold() const { return 2 * k - ell; }
  // max(k*n - ell, 0): edge count of a tight graph on n vertices.
  long long TightEdgeCount(int n) const;
  bool singletons_are_components() const { return ell >= k; }
};

// Edge ids in non-increasing weight order, ties kept in input order.
std::vector<int> SortEdges(const WeightedMultigraph& g);

// SortEdges() with negative-weight edges dropped. This is the processing
// order every weighted solver uses.
std::vector<int> WeightedOrder(const WeightedMultigraph& g);

// Stable bucket sort of edge ids by first endpoint, O(n + m). This is the
// processing order of the vertex-grouped (unweighted) mode.
std::vector<int> GroupEdgesByEndpoint(const WeightedMultigraph& g);

// Identity order 0..m-1.
std::vector<int> InputOrder(const WeightedMultigraph& g);

double TotalWeight(const WeightedMultigraph& g, std::span<const int> edge_ids);

}  // namespace klsparse

#endif  // KLSPARSE_GRAPH_H_
