#ifndef KLSPARSE_COMPONENT_TRACKER_H_
#define KLSPARSE_COMPONENT_TRACKER_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "klsparse/graph.h"

namespace klsparse {

using VertexList = std::vector<int>;

struct TrackerCounters {
  // Individual bit assignments into the pair matrix (a paired write counts 2).
  std::int64_t matrix_writes = 0;
  // Assignments that found the bit already set.
  std::int64_t redundant_writes = 0;
  // Component-list entries and component vertices visited while absorbing or
  // recalculating.
  std::int64_t merge_steps = 0;
  std::int64_t recalculations = 0;
};

// Answers "do u and v share a current (k, ell)-component?" for the component
// pebble game, and absorbs each newly formed component.
//
// After every Absorb() mirroring the accepted edges, InCommon(u, v) is true
// iff some component of the accepted subgraph contains both u and v.
class ComponentTracker {
 public:
  virtual ~ComponentTracker() = default;

  virtual std::string_view name() const = 0;
  virtual bool Supports(const SparsityParams& params) const = 0;

  // Starts over on an edgeless graph with n vertices. Singletons are
  // components exactly when ell >= k.
  virtual void Reset(int num_vertices, const SparsityParams& params) = 0;

  // u is the first endpoint of the edge being processed; the vertex-grouped
  // tracker relies on that.
  virtual bool InCommon(int u, int v) = 0;

  virtual void Absorb(std::span<const int> component) = 0;

  // Current components, each in the order it was absorbed.
  virtual std::vector<VertexList> Components() const = 0;

  virtual TrackerCounters counters() const = 0;
};

}  // namespace klsparse

#endif  // KLSPARSE_COMPONENT_TRACKER_H_
