#include "klsparse/run.h"

#include <algorithm>
#include <memory>

#include "klsparse/edge_list_io.h"
#include "klsparse/oracle.h"
#include "klsparse/trackers.h"

namespace klsparse {
namespace {

TrackerKind ToKind(TrackerChoice choice) {
  switch (choice) {
    case TrackerChoice::kDisjoint:
      return TrackerKind::kDisjoint;
    case TrackerChoice::kUnweighted:
      return TrackerKind::kUnweighted;
    default:
      return TrackerKind::kGeneral;
  }
}

WeightedMultigraph UnitWeights(const WeightedMultigraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.weight = 1.0;
  return WeightedMultigraph(g.num_vertices(), std::move(edges));
}

struct Solved {
  std::vector<int> accepted;
  std::vector<VertexList> components;
  SolveCounters counters;
};

Solved Solve(const RunConfig& config, TrackerChoice tracker,
             const WeightedMultigraph& g, std::span<const int> order) {
  Solved out;
  switch (config.algorithm) {
    case Algorithm::kNaive: {
      NaiveResult r = SolveNaive(g, config.params, order);
      out.accepted = std::move(r.accepted);
      out.counters = r.counters;
      break;
    }
    case Algorithm::kComponent: {
      std::unique_ptr<ComponentTracker> t = MakeTracker(ToKind(tracker));
      SolveReport r = SolveComponent(g, config.params, *t, order);
      out.accepted = std::move(r.accepted);
      out.components = std::move(r.components);
      out.counters = r.counters;
      break;
    }
    case Algorithm::kOracle:
      out.accepted = oracle::SolveGreedy(g, config.params, order);
      if (config.components) {
        out.components = oracle::EnumerateComponents(
            oracle::EdgeSubgraph(g, out.accepted), config.params);
      }
      break;
  }
  return out;
}

}  // namespace

std::string_view ToString(Algorithm a) {
  switch (a) {
    case Algorithm::kNaive:
      return "naive";
    case Algorithm::kComponent:
      return "component";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "";
}

std::string_view ToString(TrackerChoice t) {
  switch (t) {
    case TrackerChoice::kAuto:
      return "auto";
    case TrackerChoice::kGeneral:
      return "general";
    case TrackerChoice::kDisjoint:
      return "disjoint";
    case TrackerChoice::kUnweighted:
      return "unweighted";
  }
  return "";
}

std::string_view ToString(Check c) {
  switch (c) {
    case Check::kNone:
      return "none";
    case Check::kSparse:
      return "sparse";
    case Check::kTight:
      return "tight";
    case Check::kSpanning:
      return "spanning";
  }
  return "";
}

void ValidateConfig(const RunConfig& config, const WeightedMultigraph& g) {
  const SparsityParams& p = config.params;
  if (!p.valid()) {
    throw ConfigError("parameter error: need 0 <= ell < 2k (k=" +
                      std::to_string(p.k) + ", ell=" + std::to_string(p.ell) +
                      ")");
  }
  if (config.tracker == TrackerChoice::kDisjoint && p.ell > p.k) {
    throw ConfigError("config error: the disjoint tracker requires ell <= k");
  }
  if (config.tracker == TrackerChoice::kUnweighted && !config.unweighted &&
      !g.HasUniformWeights()) {
    throw ConfigError(
        "config error: the unweighted tracker needs equal weights or "
        "--unweighted");
  }
  if (config.algorithm == Algorithm::kNaive && config.components) {
    throw ConfigError("config error: the naive algorithm does not track components");
  }
  if (config.algorithm == Algorithm::kOracle) {
    if (config.stats) {
      throw ConfigError("config error: the oracle keeps no statistics");
    }
    const int limit = config.components && config.check == Check::kNone
                          ? oracle::kMaxComponentVertices
                          : oracle::kMaxVertices;
    if (g.num_vertices() > limit) {
      throw ConfigError("config error: the oracle handles at most " +
                        std::to_string(limit) + " vertices");
    }
  }
}

TrackerChoice ResolveTracker(const RunConfig& config) {
  if (config.tracker != TrackerChoice::kAuto) return config.tracker;
  if (config.unweighted) return TrackerChoice::kUnweighted;
  if (config.params.ell <= config.params.k) return TrackerChoice::kDisjoint;
  return TrackerChoice::kGeneral;
}

RunResult Execute(const RunConfig& config, const WeightedMultigraph& g) {
  ValidateConfig(config, g);
  RunResult result;
  result.graph = config.unweighted ? UnitWeights(g) : g;
  const WeightedMultigraph& graph = result.graph;
  const TrackerChoice tracker = ResolveTracker(config);
  if (config.algorithm == Algorithm::kComponent) {
    result.tracker = std::string(ToString(tracker));
  }
  const bool grouped = tracker == TrackerChoice::kUnweighted;

  if (config.check != Check::kNone) {
    // Sparsity facts concern every edge, whatever its weight.
    const std::vector<int> order =
        grouped ? GroupEdgesByEndpoint(graph) : InputOrder(graph);
    const long long tight = config.params.TightEdgeCount(graph.num_vertices());
    const auto m = static_cast<std::size_t>(graph.num_edges());
    if (config.algorithm == Algorithm::kOracle) {
      switch (config.check) {
        case Check::kSparse:
          result.check_result = oracle::IsSparse(graph, config.params);
          break;
        case Check::kTight:
          result.check_result = oracle::IsTight(graph, config.params);
          break;
        default:
          result.check_result = oracle::IsSpanning(graph, config.params);
          break;
      }
      return result;
    }
    Solved s = Solve(config, tracker, graph, order);
    const bool sparse = s.accepted.size() == m;
    switch (config.check) {
      case Check::kSparse:
        result.check_result = sparse;
        break;
      case Check::kTight:
        result.check_result = sparse && static_cast<long long>(m) == tight;
        break;
      default:
        result.check_result = static_cast<long long>(s.accepted.size()) == tight;
        break;
    }
    return result;
  }

  const std::vector<int> order =
      grouped ? GroupEdgesByEndpoint(graph) : WeightedOrder(graph);
  Solved s = Solve(config, tracker, graph, order);
  result.accepted = std::move(s.accepted);
  result.total_weight = TotalWeight(graph, result.accepted);
  if (config.components) result.components = Normalized(std::move(s.components));
  if (config.stats) result.counters = s.counters;
  return result;
}

std::vector<VertexList> Normalized(std::vector<VertexList> components) {
  for (VertexList& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end());
  return components;
}

namespace {

std::vector<std::pair<std::string, std::int64_t>> CounterFields(
    const SolveCounters& c) {
  return {
      {"path_searches", c.path_searches},
      {"path_search_touches", c.path_search_touches},
      {"arc_reversals", c.arc_reversals},
      {"max_search_iterations", c.max_search_iterations},
      {"find_component_calls", c.find_component_calls},
      {"find_component_touches", c.find_component_touches},
      {"components_formed", c.components_formed},
      {"matrix_writes", c.matrix_writes},
      {"redundant_writes", c.redundant_writes},
      {"tracker_merge_steps", c.tracker_merge_steps},
      {"recalculations", c.recalculations},
  };
}

}  // namespace

std::string FormatText(const RunConfig& config, const RunResult& result) {
  if (result.check_result) {
    return std::string(ToString(config.check)) + ": " +
           (*result.check_result ? "yes" : "no") + "\n";
  }
  const WeightedMultigraph& g = result.graph;
  std::string out;
  out += "vertices: " + std::to_string(g.num_vertices()) + "\n";
  out += "input_edges: " + std::to_string(g.num_edges()) + "\n";
  out += "k: " + std::to_string(config.params.k) + "\n";
  out += "ell: " + std::to_string(config.params.ell) + "\n";
  out += "accepted: " + std::to_string(result.accepted.size()) + "\n";
  out += "total_weight: " + FormatWeight(result.total_weight) + "\n";
  for (int id : result.accepted) {
    const Edge& e = g.edge(id);
    out += "edge: " + std::to_string(id) + " " + std::to_string(e.u) + " " +
           std::to_string(e.v) + " " + FormatWeight(e.weight) + "\n";
  }
  if (result.components) {
    out += "components: " + std::to_string(result.components->size()) + "\n";
    for (const VertexList& c : *result.components) {
      out += "component:";
      for (int v : c) out += " " + std::to_string(v);
      out += "\n";
    }
  }
  if (result.counters) {
    if (!result.tracker.empty()) out += "stat.tracker: " + result.tracker + "\n";
    for (const auto& [key, value] : CounterFields(*result.counters)) {
      out += "stat." + key + ": " + std::to_string(value) + "\n";
    }
  }
  return out;
}

nlohmann::json ToJson(const RunConfig& config, const RunResult& result) {
  nlohmann::json j;
  if (result.check_result) {
    j[std::string(ToString(config.check))] = *result.check_result;
    return j;
  }
  const WeightedMultigraph& g = result.graph;
  j["vertices"] = g.num_vertices();
  j["input_edges"] = g.num_edges();
  j["k"] = config.params.k;
  j["ell"] = config.params.ell;
  j["accepted"] = result.accepted.size();
  j["total_weight"] = result.total_weight;
  nlohmann::json edges = nlohmann::json::array();
  for (int id : result.accepted) {
    const Edge& e = g.edge(id);
    edges.push_back({{"index", id}, {"u", e.u}, {"v", e.v}, {"weight", e.weight}});
  }
  j["edges"] = std::move(edges);
  if (result.components) j["components"] = *result.components;
  if (result.counters) {
    nlohmann::json stats;
    if (!result.tracker.empty()) stats["tracker"] = result.tracker;
    for (const auto& [key, value] : CounterFields(*result.counters)) {
      stats[key] = value;
    }
    j["stats"] = std::move(stats);
  }
  return j;
}

}  // namespace klsparse
