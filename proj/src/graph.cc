#include "klsparse/graph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace klsparse {

WeightedMultigraph::WeightedMultigraph(int num_vertices)
    : num_vertices_(num_vertices) {
  if (num_vertices < 0) {
    throw std::invalid_argument("vertex count must be non-negative");
  }
}

WeightedMultigraph::WeightedMultigraph(int num_vertices, std::vector<Edge> edges)
    : WeightedMultigraph(num_vertices) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) AddEdge(e.u, e.v, e.weight);
}

int WeightedMultigraph::AddEdge(int u, int v, double weight) {
  if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) {
    throw std::invalid_argument("edge endpoint out of range: " +
                                std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) {
    throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }
  edges_.push_back({u, v, weight});
  return num_edges() - 1;
}

bool WeightedMultigraph::HasUniformWeights() const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.weight == edges_.front().weight;
  });
}

void SparsityParams::Validate() const {
  if (!valid()) {
    throw std::invalid_argument("invalid sparsity parameters: need 0 <= ell < 2k (k=" +
                                std::to_string(k) + ", ell=" +
                                std::to_string(ell) + ")");
  }
}

long long SparsityParams::TightEdgeCount(int n) const {
  return std::max(static_cast<long long>(k) * n - ell, 0LL);
}

std::vector<int> SortEdges(const WeightedMultigraph& g) {
  std::vector<int> order = InputOrder(g);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.edge(a).weight > g.edge(b).weight;
  });
  return order;
}

std::vector<int> WeightedOrder(const WeightedMultigraph& g) {
  std::vector<int> order = SortEdges(g);
  std::erase_if(order, [&](int id) { return g.edge(id).weight < 0; });
  return order;
}

std::vector<int> GroupEdgesByEndpoint(const WeightedMultigraph& g) {
  std::vector<int> start(g.num_vertices() + 1, 0);
  for (const Edge& e : g.edges()) ++start[e.u + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<int> order(g.num_edges());
  for (int id = 0; id < g.num_edges(); ++id) {
    order[start[g.edge(id).u]++] = id;
  }
  return order;
}

std::vector<int> InputOrder(const WeightedMultigraph& g) {
  std::vector<int> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

double TotalWeight(const WeightedMultigraph& g, std::span<const int> edge_ids) {
  double total = 0.0;
  for (int id : edge_ids) total += g.edge(id).weight;
  return total;
}

}  // namespace klsparse
