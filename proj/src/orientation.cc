#include "klsparse/orientation.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace klsparse {

Orientation::Orientation(int num_vertices, int max_indegree)
    : max_indegree_(max_indegree),
      out_(num_vertices),
      indegree_(num_vertices, 0) {}

void Orientation::AddArc(int tail, int head) {
  if (indegree_[head] >= max_indegree_) {
    throw std::logic_error("indegree bound exceeded at vertex " +
                           std::to_string(head));
  }
  out_[tail].push_back(head);
  ++indegree_[head];
  ++num_arcs_;
}

std::optional<int> Orientation::FindArc(int tail, int head) const {
  const std::vector<int>& out = out_[tail];
  auto it = std::find(out.begin(), out.end(), head);
  if (it == out.end()) return std::nullopt;
  return static_cast<int>(it - out.begin());
}

std::vector<Arc> Orientation::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(num_arcs_);
  for (int tail = 0; tail < num_vertices(); ++tail) {
    for (int head : out_[tail]) arcs.push_back({tail, head});
  }
  return arcs;
}

void ReversePath(Orientation& d, const AugmentingPath& path) {
  const std::vector<int>& w = path.vertices;
  if (w.empty()) throw std::invalid_argument("empty path");
  const int n = d.num_vertices();
  for (int x : w) {
    if (x < 0 || x >= n) throw std::invalid_argument("path vertex out of range");
  }
  if (w.size() == 1) return;

  // Tails must be distinct so that each out-list loses at most one entry and
  // the recorded slots stay valid while we splice.
  std::vector<int> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("path is not simple");
  }
  if (!d.deficient(w.front())) {
    throw std::invalid_argument("path source has no spare indegree");
  }

  const int arcs = path.num_arcs();
  std::vector<int> slots(arcs);
  for (int i = 0; i < arcs; ++i) {
    const std::vector<int>& out = d.out_[w[i]];
    if (i < static_cast<int>(path.slots.size()) && path.slots[i] >= 0 &&
        path.slots[i] < static_cast<int>(out.size()) &&
        out[path.slots[i]] == w[i + 1]) {
      slots[i] = path.slots[i];
      continue;
    }
    std::optional<int> slot = d.FindArc(w[i], w[i + 1]);
    if (!slot) {
      throw std::invalid_argument("path arc " + std::to_string(w[i]) + "->" +
                                  std::to_string(w[i + 1]) + " not present");
    }
    slots[i] = *slot;
  }

  for (int i = 0; i < arcs; ++i) {
    std::vector<int>& out = d.out_[w[i]];
    out[slots[i]] = out.back();
    out.pop_back();
  }
  for (int i = 0; i < arcs; ++i) d.out_[w[i + 1]].push_back(w[i]);
  ++d.indegree_[w.front()];
  --d.indegree_[w.back()];
}

Arc InsertArc(Orientation& d, int u, int v) {
  if (d.deficient(v)) {
    d.AddArc(u, v);
    return {u, v};
  }
  if (!d.deficient(u)) {
    throw std::logic_error("cannot orient edge " + std::to_string(u) + "-" +
                           std::to_string(v) + ": both endpoints are full");
  }
  d.AddArc(v, u);
  return {v, u};
}

void ReachabilitySearch::Resize(int num_vertices) {
  stamp_.assign(num_vertices, 0);
  generation_ = 0;
  parent_.assign(num_vertices, -1);
  parent_slot_.assign(num_vertices, -1);
  queue_.clear();
  queue_.reserve(num_vertices);
}

void ReachabilitySearch::Seed(const Orientation& d, int u, int v) {
  if (static_cast<int>(stamp_.size()) != d.num_vertices()) {
    Resize(d.num_vertices());
  }
  if (++generation_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    generation_ = 1;
  }
  queue_.clear();
  const int n = d.num_vertices();
  touches_ += n;
  for (int w = 0; w < n; ++w) {
    if (w != u && w != v && d.deficient(w)) {
      Visit(w);
      parent_[w] = -1;
      queue_.push_back(w);
    }
  }
}

std::optional<AugmentingPath> ReachabilitySearch::FindPath(const Orientation& d,
                                                           int u, int v) {
  Seed(d, u, v);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int x = queue_[head];
    std::span<const int> out = d.out_neighbors(x);
    for (int slot = 0; slot < static_cast<int>(out.size()); ++slot) {
      const int y = out[slot];
      ++touches_;
      if (y == u || y == v) {
        AugmentingPath path;
        path.vertices.push_back(y);
        path.slots.push_back(slot);
        for (int w = x; w != -1; w = parent_[w]) {
          path.vertices.push_back(w);
          if (parent_[w] != -1) path.slots.push_back(parent_slot_[w]);
        }
        std::reverse(path.vertices.begin(), path.vertices.end());
        std::reverse(path.slots.begin(), path.slots.end());
        return path;
      }
      if (!visited(y)) {
        Visit(y);
        parent_[y] = x;
        parent_slot_[y] = slot;
        queue_.push_back(y);
      }
    }
  }
  return std::nullopt;
}

std::vector<int> ReachabilitySearch::Unreachable(const Orientation& d, int u,
                                                 int v) {
  Seed(d, u, v);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    for (int y : d.out_neighbors(queue_[head])) {
      ++touches_;
      if (!visited(y)) {
        Visit(y);
        queue_.push_back(y);
      }
    }
  }
  std::vector<int> unreached;
  for (int w = 0; w < d.num_vertices(); ++w) {
    if (!visited(w)) unreached.push_back(w);
  }
  return unreached;
}

std::optional<AugmentingPath> FindPathFromDeficient(const Orientation& d, int u,
                                                    int v) {
  ReachabilitySearch search(d.num_vertices());
  return search.FindPath(d, u, v);
}

}  // namespace klsparse
