#include <algorithm>
#include <optional>

#include "klsparse/pebble_game.h"

namespace klsparse {

bool TryAccept(Orientation& d, int u, int v, const SparsityParams& params,
               ReachabilitySearch& search, AcceptStats* stats) {
  const int threshold = params.threshold();
  AcceptStats local;
  while (d.indegree(u) + d.indegree(v) >= threshold) {
    ++local.searches;
    std::optional<AugmentingPath> path = search.FindPath(d, u, v);
    if (!path) break;
    ReversePath(d, *path);
    local.arcs_reversed += path->num_arcs();
  }
  if (stats != nullptr) *stats = local;
  return d.indegree(u) + d.indegree(v) < threshold;
}

bool TryAccept(Orientation& d, int u, int v, const SparsityParams& params) {
  ReachabilitySearch search(d.num_vertices());
  return TryAccept(d, u, v, params, search);
}

NaiveResult SolveNaive(const WeightedMultigraph& g, const SparsityParams& params) {
  return SolveNaive(g, params, WeightedOrder(g));
}

NaiveResult SolveNaive(const WeightedMultigraph& g, const SparsityParams& params,
                       std::span<const int> order) {
  params.Validate();
  NaiveResult result;
  result.orientation = Orientation(g.num_vertices(), params.k);
  Orientation& d = result.orientation;
  ReachabilitySearch search(g.num_vertices());
  SolveCounters& counters = result.counters;

  for (int id : order) {
    const Edge& e = g.edge(id);
    AcceptStats stats;
    const bool ok = TryAccept(d, e.u, e.v, params, search, &stats);
    counters.path_searches += stats.searches;
    counters.arc_reversals += stats.arcs_reversed;
    counters.max_search_iterations =
        std::max(counters.max_search_iterations, stats.searches);
    if (!ok) continue;
    result.accepted.push_back(id);
    result.total_weight += e.weight;
    InsertArc(d, e.u, e.v);
  }
  counters.path_search_touches = search.touches();
  return result;
}

}  // namespace klsparse
