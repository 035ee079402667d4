#include "klsparse/bench.h"

#include <chrono>
#include <cmath>
#include <memory>

#include "klsparse/random_graph.h"
#include "klsparse/trackers.h"

namespace klsparse {

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  config.params.Validate();
  RunConfig resolve;
  resolve.params = config.params;
  resolve.tracker = config.tracker;
  TrackerChoice choice = ResolveTracker(resolve);
  if (choice == TrackerChoice::kDisjoint && config.params.ell > config.params.k) {
    throw ConfigError("config error: the disjoint tracker requires ell <= k");
  }
  const TrackerKind kind = choice == TrackerChoice::kDisjoint
                               ? TrackerKind::kDisjoint
                               : TrackerKind::kGeneral;

  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    const int n = config.sizes[i];
    const int m = static_cast<int>(std::lround(config.density * n));
    const WeightedMultigraph g =
        RandomMultigraph(n, m, config.seed + i, config.max_weight);
    const std::vector<int> order = WeightedOrder(g);

    for (Algorithm algorithm : config.algorithms) {
      if (algorithm == Algorithm::kOracle) continue;
      BenchRow row;
      row.n = n;
      row.m = m;
      row.params = config.params;
      row.algorithm = algorithm;
      const auto start = std::chrono::steady_clock::now();
      if (algorithm == Algorithm::kNaive) {
        NaiveResult r = SolveNaive(g, config.params, order);
        row.accepted = static_cast<std::int64_t>(r.accepted.size());
        row.counters = r.counters;
      } else {
        std::unique_ptr<ComponentTracker> tracker = MakeTracker(kind);
        row.tracker = std::string(tracker->name());
        SolveReport r = SolveComponent(g, config.params, *tracker, order);
        row.accepted = static_cast<std::int64_t>(r.accepted.size());
        row.counters = r.counters;
      }
      row.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,m,k,ell,algorithm,tracker,seconds,accepted,path_searches,"
         "path_search_touches,arc_reversals,find_component_touches,"
         "matrix_writes,redundant_writes,tracker_merge_steps,total_counter,"
         "writes_per_n2\n";
  for (const BenchRow& r : rows) {
    const SolveCounters& c = r.counters;
    out << r.n << ',' << r.m << ',' << r.params.k << ',' << r.params.ell << ','
        << ToString(r.algorithm) << ',' << r.tracker << ',' << r.seconds << ','
        << r.accepted << ',' << c.path_searches << ',' << c.path_search_touches
        << ',' << c.arc_reversals << ',' << c.find_component_touches << ','
        << c.matrix_writes << ',' << c.redundant_writes << ','
        << c.tracker_merge_steps << ',' << r.total_counter() << ','
        << r.writes_per_n2() << '\n';
  }
}

}  // namespace klsparse
