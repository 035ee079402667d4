#ifndef KLSPARSE_BENCH_H_
#define KLSPARSE_BENCH_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "klsparse/graph.h"
#include "klsparse/pebble_game.h"
#include "klsparse/run.h"

namespace klsparse {

struct BenchConfig {
  std::vector<int> sizes = {1000, 2000, 4000};
  // Edges per vertex: m = round(density * n).
  double density = 8.0;
  SparsityParams params;
  std::vector<Algorithm> algorithms = {Algorithm::kNaive, Algorithm::kComponent};
  // kAuto resolves as in RunConfig (never to the unweighted tracker).
  TrackerChoice tracker = TrackerChoice::kGeneral;
  std::uint64_t seed = 1;
  int max_weight = 100;
};

struct BenchRow {
  int n = 0;
  int m = 0;
  SparsityParams params;
  Algorithm algorithm = Algorithm::kComponent;
  std::string tracker;
  double seconds = 0.0;
  std::int64_t accepted = 0;
  SolveCounters counters;

  // Traversal touches plus matrix writes.
  std::int64_t total_counter() const {
    return counters.traversal_touches() + counters.matrix_writes;
  }
  double writes_per_n2() const {
    return static_cast<double>(counters.matrix_writes) /
           (static_cast<double>(n) * n);
  }
};

// Graph for size index i: RandomMultigraph(n, m, seed + i, max_weight). Every
// algorithm of a size runs on the same graph. Oracle entries are skipped.
std::vector<BenchRow> RunBench(const BenchConfig& config);

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace klsparse

#endif  // KLSPARSE_BENCH_H_
