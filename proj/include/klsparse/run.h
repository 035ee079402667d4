#ifndef KLSPARSE_RUN_H_
#define KLSPARSE_RUN_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "klsparse/component_tracker.h"
#include "klsparse/graph.h"
#include "klsparse/pebble_game.h"

namespace klsparse {

enum class Algorithm { kNaive, kComponent, kOracle };
enum class TrackerChoice { kAuto, kGeneral, kDisjoint, kUnweighted };
enum class Check { kNone, kSparse, kTight, kSpanning };

std::string_view ToString(Algorithm a);
std::string_view ToString(TrackerChoice t);
std::string_view ToString(Check c);

// Invalid parameters, or options that do not fit together.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  SparsityParams params;
  Algorithm algorithm = Algorithm::kComponent;
  TrackerChoice tracker = TrackerChoice::kAuto;
  // Treat every edge as weight 1 and process edges grouped by first endpoint.
  bool unweighted = false;
  bool components = false;
  bool stats = false;
  Check check = Check::kNone;
  bool json = false;
};

struct RunResult {
  // The graph actually solved (unit weights under --unweighted).
  WeightedMultigraph graph;
  std::vector<int> accepted;
  double total_weight = 0.0;
  // Sorted components; present when requested.
  std::optional<std::vector<VertexList>> components;
  std::optional<SolveCounters> counters;
  // Tracker used by the component algorithm, empty otherwise.
  std::string tracker;
  std::optional<bool> check_result;
};

// Throws ConfigError for invalid parameters or option combinations.
void ValidateConfig(const RunConfig& config, const WeightedMultigraph& g);

// Resolves kAuto: unweighted mode picks the vertex-grouped tracker, ell <= k
// the disjoint one, anything else the general one.
TrackerChoice ResolveTracker(const RunConfig& config);

RunResult Execute(const RunConfig& config, const WeightedMultigraph& g);

std::string FormatText(const RunConfig& config, const RunResult& result);
nlohmann::json ToJson(const RunConfig& config, const RunResult& result);

// Components with each vertex list sorted and the list sorted, the
// presentation order used in reports.
std::vector<VertexList> Normalized(std::vector<VertexList> components);

}  // namespace klsparse

#endif  // KLSPARSE_RUN_H_
