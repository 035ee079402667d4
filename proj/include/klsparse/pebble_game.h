#ifndef KLSPARSE_PEBBLE_GAME_H_
#define KLSPARSE_PEBBLE_GAME_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "klsparse/component_tracker.h"
#include "klsparse/graph.h"
#include "klsparse/orientation.h"

namespace klsparse {

// Operation counts gathered during a solve. The tracker fields are copied
// from ComponentTracker::counters() at the end of a component solve.
struct SolveCounters {
  std::int64_t path_searches = 0;
  std::int64_t path_search_touches = 0;
  std::int64_t arc_reversals = 0;
  // Largest number of path searches spent on a single edge.
  int max_search_iterations = 0;

  std::int64_t find_component_calls = 0;
  std::int64_t find_component_touches = 0;
  std::int64_t components_formed = 0;

  std::int64_t matrix_writes = 0;
  std::int64_t redundant_writes = 0;
  std::int64_t tracker_merge_steps = 0;
  std::int64_t recalculations = 0;

  std::int64_t traversal_touches() const {
    return path_search_touches + find_component_touches;
  }
};

// ---------------------------------------------------------------------------
// Naive augmenting-path pebble game, O(nm).

struct AcceptStats {
  // Path searches performed; at most ell + 1.
  int searches = 0;
  int arcs_reversed = 0;
};

// Decides whether edge uv can join the sparse graph oriented by `d`, reversing
// augmenting paths until the indegree sum of u and v drops below 2k - ell or
// no path exists. Reversals made before a failure are kept; they leave a valid
// orientation of the same edge set. Does not insert the arc.
bool TryAccept(Orientation& d, int u, int v, const SparsityParams& params,
               ReachabilitySearch& search, AcceptStats* stats = nullptr);
bool TryAccept(Orientation& d, int u, int v, const SparsityParams& params);

struct NaiveResult {
  std::vector<int> accepted;
  double total_weight = 0.0;
  Orientation orientation;
  SolveCounters counters;
};

NaiveResult SolveNaive(const WeightedMultigraph& g, const SparsityParams& params);
// Processes exactly the edge ids in `order`.
NaiveResult SolveNaive(const WeightedMultigraph& g, const SparsityParams& params,
                       std::span<const int> order);

// ---------------------------------------------------------------------------
// Component pebble game, O(n^2 + m).

struct SolveReport {
  std::vector<int> accepted;
  double total_weight = 0.0;
  std::vector<VertexList> components;
  Orientation orientation;
  SolveCounters counters;
};

// Handed to a StepObserver after every accepted edge.
struct AcceptedStep {
  int edge = -1;
  int search_iterations = 0;
  std::span<const int> accepted;
  const Orientation& orientation;
  const ComponentTracker& tracker;
  // Empty when the edge formed no new component.
  std::span<const int> new_component;
};

using StepObserver = std::function<void(const AcceptedStep&)>;

// The component of the accepted graph containing u and v, formed by the arc
// just inserted for edge uv, or an empty list. Requires
// indegree(u) + indegree(v) <= 2k - ell.
VertexList FindComponent(const Orientation& d, int u, int v,
                         const SparsityParams& params,
                         ReachabilitySearch& search);
VertexList FindComponent(const Orientation& d, int u, int v,
                         const SparsityParams& params);

// Weighted order (WeightedOrder); throws std::invalid_argument when the
// tracker does not support `params`.
SolveReport SolveComponent(const WeightedMultigraph& g,
                           const SparsityParams& params,
                           ComponentTracker& tracker,
                           const StepObserver& observer = {});
SolveReport SolveComponent(const WeightedMultigraph& g,
                           const SparsityParams& params,
                           ComponentTracker& tracker, std::span<const int> order,
                           const StepObserver& observer = {});

}  // namespace klsparse

#endif  // KLSPARSE_PEBBLE_GAME_H_
