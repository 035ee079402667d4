#ifndef KLSPARSE_ORIENTATION_H_
#define KLSPARSE_ORIENTATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace klsparse {

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed path w_0 -> w_1 -> ... -> w_t in an Orientation. When `slots` is
// non-empty, slots[i] is the position of arc w_i -> w_{i+1} in the out-list
// of w_i at the time the path was found; it is only a lookup hint.
struct AugmentingPath {
  std::vector<int> vertices;
  std::vector<int> slots;

  int source() const { return vertices.front(); }
  int target() const { return vertices.back(); }
  int num_arcs() const { return static_cast<int>(vertices.size()) - 1; }
};

// Digraph whose every vertex has indegree at most max_indegree(). It is the
// orientation of the accepted edge set: each accepted edge is exactly one arc.
//
// Arcs are stored as per-vertex out-lists; a reversal moves one entry from
// the tail's list to the head's list.
class Orientation {
 public:
  Orientation() = default;
  Orientation(int num_vertices, int max_indegree);

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int max_indegree() const { return max_indegree_; }
  int num_arcs() const { return num_arcs_; }
  int indegree(int v) const { return indegree_[v]; }
  bool deficient(int v) const { return indegree_[v] < max_indegree_; }
  std::span<const int> out_neighbors(int v) const { return out_[v]; }

  // Throws std::logic_error when head already has full indegree.
  void AddArc(int tail, int head);

  // Position of one tail->head arc inside tail's out-list.
  std::optional<int> FindArc(int tail, int head) const;

  std::vector<Arc> Arcs() const;

 private:
  friend void ReversePath(Orientation& d, const AugmentingPath& path);

  int max_indegree_ = 0;
  int num_arcs_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<int> indegree_;
};

// Reverses every arc of `path`. The path must be simple and its first vertex
// must have spare indegree; otherwise std::invalid_argument is thrown and the
// orientation is left untouched.
void ReversePath(Orientation& d, const AugmentingPath& path);

// Inserts the arc for a new edge uv: u->v when v has spare indegree, else v->u.
// Throws std::logic_error when neither endpoint has room.
Arc InsertArc(Orientation& d, int u, int v);

// Breadth-first engine over an Orientation with generation-stamped visit
// marks, so repeated searches cost O(n + arcs) without clearing state.
// Sources are always the deficient vertices outside {u, v}.
class ReachabilitySearch {
 public:
  ReachabilitySearch() = default;
  explicit ReachabilitySearch(int num_vertices) { Resize(num_vertices); }

  void Resize(int num_vertices);

  // Shortest path from a deficient vertex w not in {u, v} to u or v. The
  // search stops at the first arrival at either target.
  std::optional<AugmentingPath> FindPath(const Orientation& d, int u, int v);

  // Vertices not reachable from the deficient set outside {u, v}, in
  // increasing id order.
  std::vector<int> Unreachable(const Orientation& d, int u, int v);

  // Vertices inspected while seeding sources plus arcs scanned, accumulated
  // over every call.
  std::int64_t touches() const { return touches_; }

 private:
  void Seed(const Orientation& d, int u, int v);
  bool visited(int w) const { return stamp_[w] == generation_; }
  void Visit(int w) { stamp_[w] = generation_; }

  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  std::vector<int> parent_;
  std::vector<int> parent_slot_;
  std::vector<int> queue_;
  std::int64_t touches_ = 0;
};

// One-shot convenience wrapper around ReachabilitySearch::FindPath.
std::optional<AugmentingPath> FindPathFromDeficient(const Orientation& d, int u,
                                                    int v);

}  // namespace klsparse

#endif  // KLSPARSE_ORIENTATION_H_
