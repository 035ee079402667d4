#include <algorithm>
#include <map>

#include "klsparse/trackers.h"

namespace klsparse {

void DisjointTracker::Reset(int num_vertices, const SparsityParams& params) {
  rep_.assign(num_vertices, kNone);
  counters_ = {};
  if (params.singletons_are_components()) {
    for (int v = 0; v < num_vertices; ++v) rep_[v] = v;
  }
}

void DisjointTracker::Absorb(std::span<const int> component) {
  if (component.empty()) return;
  const int head = component.front();
  for (int v : component) rep_[v] = head;
  counters_.merge_steps += static_cast<std::int64_t>(component.size());
}

std::vector<VertexList> DisjointTracker::Components() const {
  std::map<int, VertexList> groups;
  for (int v = 0; v < static_cast<int>(rep_.size()); ++v) {
    if (rep_[v] != kNone) groups[rep_[v]].push_back(v);
  }
  std::vector<VertexList> out;
  out.reserve(groups.size());
  for (auto& [rep, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace klsparse
