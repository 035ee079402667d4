#include <algorithm>

#include "klsparse/trackers.h"

namespace klsparse {

void UnweightedTracker::Reset(int num_vertices, const SparsityParams& params) {
  components_.clear();
  mark_.assign(num_vertices, 0);
  in_component_.assign(num_vertices, 0);
  current_ = -1;
  counters_ = {};
  if (params.singletons_are_components()) {
    components_.reserve(num_vertices);
    for (int v = 0; v < num_vertices; ++v) components_.push_back({v});
  }
}

bool UnweightedTracker::InCommon(int u, int v) {
  if (current_ != u) {
    current_ = u;
    Recalculate(u);
  }
  return mark_[v] != 0;
}

void UnweightedTracker::Recalculate(int u) {
  ++counters_.recalculations;
  std::fill(mark_.begin(), mark_.end(), 0);
  for (const VertexList& x : components_) {
    counters_.merge_steps += static_cast<std::int64_t>(x.size());
    if (std::find(x.begin(), x.end(), u) == x.end()) continue;
    for (int w : x) mark_[w] = 1;
  }
}

void UnweightedTracker::Absorb(std::span<const int> component) {
  for (int c : component) in_component_[c] = 1;
  std::vector<VertexList> kept;
  kept.reserve(components_.size() + 1);
  for (VertexList& x : components_) {
    ++counters_.merge_steps;
    const bool contained = x.size() == 1
                               ? in_component_[x[0]] != 0
                               : in_component_[x[0]] && in_component_[x[1]];
    if (!contained) kept.push_back(std::move(x));
  }
  kept.emplace_back(component.begin(), component.end());
  components_ = std::move(kept);
  for (int c : component) {
    in_component_[c] = 0;
    mark_[c] = 1;
  }
}

}  // namespace klsparse
