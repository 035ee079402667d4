#include "klsparse/cli.h"

#include <algorithm>
#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "klsparse/bench.h"
#include "klsparse/edge_list_io.h"
#include "klsparse/run.h"

namespace klsparse {
namespace {

constexpr const char* kDescription =
    "Maximum-weight (k,ell)-sparse subgraphs of loopless multigraphs via the "
    "component pebble game.\n\n"
    "Input: edge list (path or stdin). First non-comment line \"n m\", then m "
    "lines \"u v [w]\" with 0-based ids and optional weight (default 1). "
    "Lines starting with '#' are ignored.\n\n"
    "--bench generates Erdos-Renyi style multigraphs: round(density*n) edges, "
    "each with an independent uniformly random pair of distinct endpoints and "
    "an integer weight uniform in [1,100], drawn from std::mt19937_64 seeded "
    "with seed+i for the i-th size. Output is CSV.";

}  // namespace

int RunCommandLine(const std::vector<std::string>& args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{kDescription, "klsparse"};

  RunConfig config;
  std::string input = "-";
  std::string algorithm = "component";
  std::string tracker = "auto";
  std::string check;
  bool bench = false;
  std::uint64_t seed = 1;
  std::vector<int> sizes = {1000, 2000, 4000};
  double density = 8.0;

  app.add_option("input", input, "Edge list file, '-' for stdin");
  app.add_option("--k", config.params.k, "Sparsity parameter k")
      ->capture_default_str();
  app.add_option("--ell", config.params.ell, "Sparsity parameter ell (0 <= ell < 2k)")
      ->capture_default_str();
  auto* algorithm_opt =
      app.add_option("--algorithm", algorithm, "naive | component | oracle")
          ->check(CLI::IsMember({"naive", "component", "oracle"}))
          ->capture_default_str();
  app.add_option("--tracker", tracker, "auto | general | disjoint | unweighted")
      ->check(CLI::IsMember({"auto", "general", "disjoint", "unweighted"}))
      ->capture_default_str();
  app.add_flag("--unweighted", config.unweighted,
               "Unit weights, edges processed grouped by first endpoint");
  app.add_flag("--components", config.components, "Print final components");
  app.add_flag("--stats", config.stats, "Print operation counters");
  app.add_option("--check", check, "Report whether the input is sparse | tight | spanning")
      ->check(CLI::IsMember({"sparse", "tight", "spanning"}));
  app.add_flag("--json", config.json, "JSON output");
  app.add_flag("--bench", bench, "Run the scaling benchmark instead of solving");
  app.add_option("--seed", seed, "Benchmark generator seed")->capture_default_str();
  app.add_option("--sizes", sizes, "Benchmark vertex counts, comma separated")
      ->delimiter(',');
  app.add_option("--density", density, "Benchmark edges per vertex")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  static const std::map<std::string, Algorithm> kAlgorithms = {
      {"naive", Algorithm::kNaive},
      {"component", Algorithm::kComponent},
      {"oracle", Algorithm::kOracle}};
  static const std::map<std::string, TrackerChoice> kTrackers = {
      {"auto", TrackerChoice::kAuto},
      {"general", TrackerChoice::kGeneral},
      {"disjoint", TrackerChoice::kDisjoint},
      {"unweighted", TrackerChoice::kUnweighted}};
  static const std::map<std::string, Check> kChecks = {
      {"", Check::kNone},
      {"sparse", Check::kSparse},
      {"tight", Check::kTight},
      {"spanning", Check::kSpanning}};
  config.algorithm = kAlgorithms.at(algorithm);
  config.tracker = kTrackers.at(tracker);
  config.check = kChecks.at(check);

  if (bench) {
    BenchConfig bc;
    bc.sizes = sizes;
    bc.density = density;
    bc.params = config.params;
    bc.seed = seed;
    bc.tracker = config.tracker == TrackerChoice::kAuto ? TrackerChoice::kGeneral
                                                        : config.tracker;
    if (algorithm_opt->count() > 0) bc.algorithms = {config.algorithm};
    try {
      if (!config.params.valid()) {
        throw ConfigError("parameter error: need 0 <= ell < 2k");
      }
      if (bc.tracker == TrackerChoice::kUnweighted) {
        throw ConfigError("config error: --bench runs weighted instances");
      }
      if (std::any_of(sizes.begin(), sizes.end(), [](int n) { return n < 2; })) {
        throw ConfigError("config error: benchmark sizes must be at least 2");
      }
      WriteBenchCsv(out, RunBench(bc));
    } catch (const ConfigError& e) {
      err << e.what() << "\n";
      return kExitConfigError;
    }
    return kExitOk;
  }

  WeightedMultigraph graph;
  try {
    if (input == "-") {
      graph = ParseEdgeList(in);
    } else {
      std::ifstream file(input);
      if (!file) {
        err << "cannot open " << input << "\n";
        return kExitIoError;
      }
      graph = ParseEdgeList(file);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }

  try {
    RunResult result = Execute(config, graph);
    if (config.json) {
      out << ToJson(config, result).dump(2) << "\n";
    } else {
      out << FormatText(config, result);
    }
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitOk;
}

}  // namespace klsparse
