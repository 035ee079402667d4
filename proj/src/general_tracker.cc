#include <numeric>

#include "klsparse/trackers.h"

namespace klsparse {

std::int64_t AbsorbStats::overlap_sum() const {
  return std::accumulate(overlaps.begin(), overlaps.end(), std::int64_t{0});
}

std::int64_t AbsorbStats::overlap_square_sum() const {
  std::int64_t total = 0;
  for (int o : overlaps) total += static_cast<std::int64_t>(o) * o;
  return total;
}

void GeneralTracker::Reset(int num_vertices, const SparsityParams& params) {
  num_vertices_ = num_vertices;
  matrix_.Reset(num_vertices);
  components_.clear();
  in_component_.assign(num_vertices, 0);
  in_union_.assign(num_vertices, 0);
  in_deleted_.assign(num_vertices, 0);
  last_ = {};
  counters_ = {};
  if (params.singletons_are_components()) {
    components_.reserve(num_vertices);
    for (int v = 0; v < num_vertices; ++v) {
      matrix_.Set(v, v);
      components_.push_back({v});
    }
  }
}

void GeneralTracker::Write(int a, int b) {
  ++last_.writes;
  if (matrix_.Set(a, b)) ++last_.redundant_writes;
}

void GeneralTracker::Absorb(std::span<const int> component) {
  last_ = {};
  for (int c : component) in_component_[c] = 1;

  // U: union of the components swallowed by the new one, in merge order.
  VertexList merged;
  std::vector<VertexList> kept;
  kept.reserve(components_.size() + 1);
  VertexList union_minus_x;
  VertexList x_minus_union;

  for (VertexList& x : components_) {
    ++counters_.merge_steps;
    // Distinct components share at most one vertex, so two members decide
    // containment.
    const bool contained = x.size() == 1
                               ? in_component_[x[0]] != 0
                               : in_component_[x[0]] && in_component_[x[1]];
    if (!contained) {
      kept.push_back(std::move(x));
      continue;
    }
    counters_.merge_steps += static_cast<std::int64_t>(x.size() + merged.size());

    for (int w : x) in_deleted_[w] = 1;
    union_minus_x.clear();
    x_minus_union.clear();
    for (int w : merged) {
      if (!in_deleted_[w]) union_minus_x.push_back(w);
    }
    for (int w : x) {
      if (!in_union_[w]) x_minus_union.push_back(w);
    }
    for (int a : union_minus_x) {
      for (int b : x_minus_union) {
        Write(a, b);
        Write(b, a);
      }
    }
    last_.overlaps.push_back(static_cast<int>(x.size() - x_minus_union.size()));
    for (int w : x_minus_union) {
      in_union_[w] = 1;
      merged.push_back(w);
    }
    for (int w : x) in_deleted_[w] = 0;
    last_.deleted.push_back(std::move(x));
  }

  VertexList fresh;
  for (int c : component) {
    if (!in_union_[c]) fresh.push_back(c);
  }
  for (int a : merged) {
    for (int b : fresh) {
      Write(a, b);
      Write(b, a);
    }
  }
  for (int a : fresh) {
    for (int b : fresh) Write(a, b);
  }

  kept.emplace_back(component.begin(), component.end());
  components_ = std::move(kept);

  for (int w : merged) in_union_[w] = 0;
  for (int c : component) in_component_[c] = 0;

  counters_.matrix_writes += last_.writes;
  counters_.redundant_writes += last_.redundant_writes;
}

}  // namespace klsparse
