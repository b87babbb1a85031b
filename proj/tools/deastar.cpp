// deastar command-line front end: experiments, corpus generation, oracle
// queries, result comparison and single-run traces.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "deastar/alpha_star.hpp"
#include "deastar/dea_policy.hpp"
#include "deastar/errors.hpp"
#include "deastar/generators.hpp"
#include "deastar/harness.hpp"
#include "deastar/map_io.hpp"
#include "deastar/oracle.hpp"

namespace fs = std::filesystem;
using namespace deastar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
};

int cmd_run(const RunArgs& args) {
  ExperimentConfig cfg = load_config(args.config);
  if (args.seed) cfg.master_seed = *args.seed;
  const ResultSet results = run_experiment(cfg, RunOptions{args.jobs, true});
  std::cout << "rows " << results.rows.size() << ", traces checked " << results.traces_checked << ", invalid "
            << results.traces_invalid << ", runaway " << results.runaway_trials << "\n";
  std::cout << "csv  " << cfg.output.csv.string() << "\njson " << cfg.output.json.string() << "\n";
  if (results.traces_invalid > 0) {
    std::cerr << "error: " << results.traces_invalid << " trace(s) failed validation\n";
    return kExitRuntime;
  }
  return kExitOk;
}

struct GenArgs {
  std::string kind;
  std::string out;
  std::uint64_t seed = 0;
  int count = 1;
  int width = 0;
  int height = 0;
  double density = 0.25;
};

int cmd_gen_maps(const GenArgs& args) {
  fs::create_directories(args.out);
  for (int i = 0; i < args.count; ++i) {
    const std::uint64_t seed = corpus_seed(args.seed, static_cast<std::size_t>(i));
    const GridMap map = args.kind == "maze" ? generate_maze(args.width, args.height, seed)
                                            : generate_obstacle_field(args.width, args.height, args.density, seed).map;
    char name[32];
    std::snprintf(name, sizeof name, "map_%04d.map", i);
    save_map(map, fs::path(args.out) / name);
  }
  std::cout << "wrote " << args.count << " map(s) to " << args.out << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& map_path) {
  const GridMap map = load_map(map_path);
  const OracleResult r = dijkstra_cost(map);
  if (r.reachable())
    std::cout << "c_star " << *r.cost << "\n";
  else
    std::cout << "unreachable\n";
  return kExitOk;
}

int cmd_compare(const std::string& results_path, const std::string& out_path) {
  const ResultSet results = parse_results_csv(read_file(results_path));
  const Comparison cmp = compare_policies(results);
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + out_path);
  out << comparison_csv(cmp);
  std::cout << comparison_table(cmp);
  return kExitOk;
}

struct TraceArgs {
  std::string map;
  std::string algorithm = "dea_star";
  double lambda = 0.0;
  double Lambda = 1.0;
  std::string perimeter;
  double epsilon = 1.0;
  double delta = 0.5;
  int radius = 0;
  std::uint64_t seed = 0;
  std::string trace_out;
  std::string decisions_out;
  std::string offline_trail;
};

int cmd_trace(const TraceArgs& args) {
  const GridMap map = load_map(args.map);
  const Rational lambda = Rational::from_double(args.lambda);
  const Rational Lambda = Rational::from_double(args.Lambda);
  const SensingMode sensing = args.radius > 0 ? SensingMode::within(args.radius) : SensingMode::omniscient();

  if (!args.offline_trail.empty()) {
    const Perimeter perimeter = parse_perimeter(args.perimeter.empty() ? "g_aggressive" : args.perimeter);
    const SearchResult offline = alpha_star(map, Heuristic::manhattan, AlphaParams(lambda, Lambda, perimeter));
    std::ofstream out(args.offline_trail, std::ios::binary | std::ios::trunc);
    write_trail_jsonl(out, offline.trail);
  }

  Policy policy;
  std::optional<PacParams> pac;
  if (args.algorithm == "astar_replan") {
    policy = AStarReplan{};
  } else if (args.algorithm == "alpha_star") {
    policy = AlphaStarPolicy{
        AlphaParams(lambda, Lambda, parse_perimeter(args.perimeter.empty() ? "g_aggressive" : args.perimeter))};
  } else if (args.algorithm == "dea_star") {
    pac.emplace(args.epsilon, args.delta, lambda, Lambda,
                parse_perimeter_family(args.perimeter.empty() ? "g" : args.perimeter));
    if (const auto w = pac->warning()) std::cerr << "warning: " << *w << "\n";
    policy = DeaStarPolicy{*pac};
  } else {
    throw UsageError("unknown algorithm '" + args.algorithm + "'");
  }

  RealtimeOutcome outcome = execute_realtime(map, Heuristic::manhattan, policy, sensing, args.seed);
  const std::string json = trace_to_json(outcome.trace);
  if (args.trace_out.empty()) {
    std::cout << json << "\n";
  } else {
    std::ofstream out(args.trace_out, std::ios::binary | std::ios::trunc);
    out << json << "\n";
  }
  if (!args.decisions_out.empty()) {
    std::ofstream out(args.decisions_out, std::ios::binary | std::ios::trunc);
    write_decisions_jsonl(out, outcome.decisions);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deastar: AlphA* and delta-epsilon-alpha* real-time search experiments"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "run an experiment config and write CSV/JSON results");
  run_cmd->add_option("--config", run.config, "experiment config (JSON)")->required();
  run_cmd->add_option("--seed", run.seed, "override master_seed");
  run_cmd->add_option("--jobs", run.jobs, "worker threads")->check(CLI::PositiveNumber);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-maps", "write a seeded map corpus");
  gen_cmd->add_option("--kind", gen.kind)->required()->check(CLI::IsMember({"maze", "field"}));
  gen_cmd->add_option("--out", gen.out, "output directory")->required();
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--count", gen.count)->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--width", gen.width)->required();
  gen_cmd->add_option("--height", gen.height)->required();
  gen_cmd->add_option("--density", gen.density, "blocked-cell probability (field only)");

  std::string oracle_map;
  auto* oracle_cmd = app.add_subcommand("oracle", "print the optimal start-goal cost of a map");
  oracle_cmd->add_option("--map", oracle_map)->required();

  std::string compare_in, compare_out;
  auto* compare_cmd = app.add_subcommand("compare", "summarize a results CSV per algorithm");
  compare_cmd->add_option("--results", compare_in)->required();
  compare_cmd->add_option("--out", compare_out)->required();

  TraceArgs tr;
  auto* trace_cmd = app.add_subcommand("trace", "run one real-time search and dump its trace");
  trace_cmd->add_option("--map", tr.map)->required();
  trace_cmd->add_option("--algorithm", tr.algorithm)
      ->check(CLI::IsMember({"astar_replan", "alpha_star", "dea_star"}));
  trace_cmd->add_option("--lambda", tr.lambda);
  trace_cmd->add_option("--Lambda", tr.Lambda);
  trace_cmd->add_option("--perimeter", tr.perimeter, "AlphA* perimeter, or g/h family for dea_star");
  trace_cmd->add_option("--epsilon", tr.epsilon);
  trace_cmd->add_option("--delta", tr.delta);
  trace_cmd->add_option("--radius", tr.radius, "sensing radius, 0 = omniscient");
  trace_cmd->add_option("--seed", tr.seed);
  trace_cmd->add_option("--trace-out", tr.trace_out, "trace JSON (default stdout)");
  trace_cmd->add_option("--decisions-out", tr.decisions_out, "perimeter decision log (JSON lines)");
  trace_cmd->add_option("--offline-trail", tr.offline_trail, "also write an offline AlphA* expansion trail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*gen_cmd) return cmd_gen_maps(gen);
    if (*oracle_cmd) return cmd_oracle(oracle_map);
    if (*compare_cmd) return cmd_compare(compare_in, compare_out);
    if (*trace_cmd) return cmd_trace(tr);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const GenerationError& e) {
    std::cerr << "generation error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}
