#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "klsparse/pebble_game.h"

namespace klsparse {

VertexList FindComponent(const Orientation& d, int u, int v,
                         const SparsityParams& params,
                         ReachabilitySearch& search) {
  // Below the threshold no block can contain both endpoints.
  if (d.indegree(u) + d.indegree(v) < params.threshold()) return {};
  VertexList unreached = search.Unreachable(d, u, v);
  const bool has_u = std::binary_search(unreached.begin(), unreached.end(), u);
  const bool has_v = std::binary_search(unreached.begin(), unreached.end(), v);
  if (!has_u || !has_v) return {};
  return unreached;
}

VertexList FindComponent(const Orientation& d, int u, int v,
                         const SparsityParams& params) {
  ReachabilitySearch search(d.num_vertices());
  return FindComponent(d, u, v, params, search);
}

SolveReport SolveComponent(const WeightedMultigraph& g,
                           const SparsityParams& params,
                           ComponentTracker& tracker,
                           const StepObserver& observer) {
  return SolveComponent(g, params, tracker, WeightedOrder(g), observer);
}

SolveReport SolveComponent(const WeightedMultigraph& g,
                           const SparsityParams& params,
                           ComponentTracker& tracker, std::span<const int> order,
                           const StepObserver& observer) {
  params.Validate();
  if (!tracker.Supports(params)) {
    throw std::invalid_argument(std::string(tracker.name()) +
                                " tracker does not support k=" +
                                std::to_string(params.k) +
                                ", ell=" + std::to_string(params.ell));
  }
  const int n = g.num_vertices();
  tracker.Reset(n, params);

  SolveReport report;
  report.orientation = Orientation(n, params.k);
  Orientation& d = report.orientation;
  ReachabilitySearch path_search(n);
  ReachabilitySearch component_search(n);
  SolveCounters& counters = report.counters;
  const int threshold = params.threshold();

  for (int id : order) {
    const Edge& e = g.edge(id);
    const int u = e.u;
    const int v = e.v;
    if (tracker.InCommon(u, v)) continue;

    int searches = 0;
    while (d.indegree(u) + d.indegree(v) >= threshold) {
      ++searches;
      std::optional<AugmentingPath> path = path_search.FindPath(d, u, v);
      if (!path) {
        // No shared component means the edge is independent, so a path
        // must exist; reaching this is a tracker bug.
        throw std::logic_error("no augmenting path for edge " +
                               std::to_string(id) +
                               " although its endpoints share no component");
      }
      ReversePath(d, *path);
      counters.arc_reversals += path->num_arcs();
    }
    counters.path_searches += searches;
    counters.max_search_iterations =
        std::max(counters.max_search_iterations, searches);

    report.accepted.push_back(id);
    report.total_weight += e.weight;
    InsertArc(d, u, v);

    ++counters.find_component_calls;
    VertexList component = FindComponent(d, u, v, params, component_search);
    if (!component.empty()) {
      ++counters.components_formed;
      tracker.Absorb(component);
    }
    if (observer) {
      observer(AcceptedStep{id, searches, report.accepted, d, tracker,
                            component});
    }
  }

  counters.path_search_touches = path_search.touches();
  counters.find_component_touches = component_search.touches();
  const TrackerCounters tc = tracker.counters();
  counters.matrix_writes = tc.matrix_writes;
  counters.redundant_writes = tc.redundant_writes;
  counters.tracker_merge_steps = tc.merge_steps;
  counters.recalculations = tc.recalculations;
  report.components = tracker.Components();
  return report;
}

}  // namespace klsparse
