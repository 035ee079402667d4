#ifndef KLSPARSE_TRACKERS_H_
#define KLSPARSE_TRACKERS_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "klsparse/component_tracker.h"
#include "klsparse/graph.h"
#include "klsparse/pair_matrix.h"

namespace klsparse {

// Bookkeeping for one GeneralTracker::Absorb call. With C_1..C_t the deleted
// components in list order and U_i = C_1 u ... u C_i, overlaps[i-1] is
// |U_{i-1} n C_i|.
struct AbsorbStats {
  std::vector<VertexList> deleted;
  std::vector<int> overlaps;
  std::int64_t writes = 0;
  std::int64_t redundant_writes = 0;

  int num_deleted() const { return static_cast<int>(deleted.size()); }
  std::int64_t overlap_sum() const;
  std::int64_t overlap_square_sum() const;
};

// Full-range tracker (0 <= ell < 2k): a symmetric pair matrix answering
// InCommon in O(1), plus the list of current components.
class GeneralTracker final : public ComponentTracker {
 public:
  std::string_view name() const override { return "general"; }
  bool Supports(const SparsityParams& params) const override {
    return params.valid();
  }
  void Reset(int num_vertices, const SparsityParams& params) override;
  bool InCommon(int u, int v) override { return matrix_.Get(u, v); }
  void Absorb(std::span<const int> component) override;
  std::vector<VertexList> Components() const override { return components_; }
  TrackerCounters counters() const override { return counters_; }

  const PairMatrix& matrix() const { return matrix_; }
  const AbsorbStats& last_absorb() const { return last_; }

 private:
  void Write(int a, int b);

  int num_vertices_ = 0;
  PairMatrix matrix_;
  std::vector<VertexList> components_;
  // Characteristic vectors of C, U and X; always all-zero between calls.
  std::vector<char> in_component_;
  std::vector<char> in_union_;
  std::vector<char> in_deleted_;
  AbsorbStats last_;
  TrackerCounters counters_;
};

// Tracker for ell <= k, where components are pairwise disjoint: every vertex
// stores the representative of its component, or -1.
class DisjointTracker final : public ComponentTracker {
 public:
  static constexpr int kNone = -1;

  std::string_view name() const override { return "disjoint"; }
  bool Supports(const SparsityParams& params) const override {
    return params.valid() && params.ell <= params.k;
  }
  void Reset(int num_vertices, const SparsityParams& params) override;
  bool InCommon(int u, int v) override {
    return rep_[u] != kNone && rep_[v] != kNone && rep_[u] == rep_[v];
  }
  void Absorb(std::span<const int> component) override;
  // Reconstructed from the representatives, ordered by smallest vertex.
  std::vector<VertexList> Components() const override;
  TrackerCounters counters() const override { return counters_; }

  int representative(int v) const { return rep_[v]; }

 private:
  std::vector<int> rep_;
  TrackerCounters counters_;
};

// O(n)-space tracker for the unweighted problem. Edges must arrive grouped by
// their first endpoint; a mark array records which vertices share a component
// with the current first endpoint and is rebuilt whenever that endpoint
// changes.
class UnweightedTracker final : public ComponentTracker {
 public:
  std::string_view name() const override { return "unweighted"; }
  bool Supports(const SparsityParams& params) const override {
    return params.valid();
  }
  void Reset(int num_vertices, const SparsityParams& params) override;
  bool InCommon(int u, int v) override;
  void Absorb(std::span<const int> component) override;
  std::vector<VertexList> Components() const override { return components_; }
  TrackerCounters counters() const override { return counters_; }

  void Recalculate(int u);
  int current_endpoint() const { return current_; }

 private:
  std::vector<VertexList> components_;
  std::vector<char> mark_;
  std::vector<char> in_component_;
  int current_ = -1;
  TrackerCounters counters_;
};

enum class TrackerKind { kGeneral, kDisjoint, kUnweighted };

std::unique_ptr<ComponentTracker> MakeTracker(TrackerKind kind);

}  // namespace klsparse

#endif  // KLSPARSE_TRACKERS_H_
