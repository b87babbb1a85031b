#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deastar/alpha.hpp"
#include "deastar/dea_gate.hpp"
#include "deastar/grid.hpp"
#include "deastar/realtime.hpp"
#include "json.hpp"

namespace deastar {

struct CorpusSpec {
  enum class Kind { field, maze, files };
  Kind kind = Kind::field;
  int width = 20;
  int height = 20;
  double density = 0.25;
  int count = 0;
  std::vector<std::filesystem::path> maps;  // Kind::files only
};

struct AlgorithmSpec {
  enum class Kind { astar_replan, alpha_star, dea_star };
  Kind kind = Kind::astar_replan;
  std::string id;                    // unique label used in every output
  std::optional<AlphaParams> alpha;  // alpha_star only
  std::optional<PacParams> pac;      // dea_star only
  double epsilon = 0.0;              // exceedance threshold for this algorithm

  Policy policy() const;
};

struct OutputSpec {
  std::filesystem::path csv;
  std::filesystem::path json;
};

struct ExperimentConfig {
  std::uint64_t master_seed = 0;
  CorpusSpec corpus;
  std::vector<AlgorithmSpec> algorithms;
  SensingMode sensing;
  int trials_per_map = 1;
  OutputSpec output;
  Heuristic heuristic = Heuristic::manhattan;
  std::size_t step_budget = RealtimeOptions{}.step_budget;
};

/// Parses the config document. Relative paths (map files, outputs) are
/// resolved against `base_dir`. Throws ConfigError on any schema problem.
ExperimentConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Derived seeds. Map i of a generated corpus uses corpus_seed(master, i);
/// trial t of algorithm a on map m uses trial_seed(master, m, a, t).
std::uint64_t corpus_seed(std::uint64_t master_seed, std::size_t map_index);
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t map_index, std::size_t algorithm_index,
                         std::size_t trial);

/// One (map, algorithm, trial) execution. Field order is the CSV column order.
struct RunResult {
  std::size_t map_id = 0;
  std::string algorithm_id;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Cost c_star = 0;
  Cost traveled = 0;
  Cost literal = 0;
  double ratio = 0.0;
  bool exceeded_epsilon = false;
  std::size_t mu = 0;
  std::int64_t sum_sigma = 0;
  std::size_t aggressive_count = 0;
  std::size_t nonaggressive_count = 0;
  bool reached_goal = false;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

struct AlgorithmAggregate {
  std::string algorithm_id;
  std::size_t rows = 0;
  double mean_ratio = 0.0;
  double median_ratio = 0.0;
  double exceedance_rate = 0.0;
  double mean_mu = 0.0;
  double mean_sum_sigma = 0.0;
};

struct CorpusEntry {
  std::size_t map_id = 0;
  std::string source;  // generator description or file path
  Cost c_star = 0;
  int retries = 0;
};

struct ResultSet {
  std::vector<RunResult> rows;               // sorted by (map_id, algorithm order, trial)
  std::vector<std::string> algorithm_order;  // config order
  std::vector<AlgorithmAggregate> aggregates;
  std::vector<CorpusEntry> corpus;
  std::size_t traces_checked = 0;
  std::size_t traces_invalid = 0;
  std::size_t runaway_trials = 0;
};

/// Row aggregation, per algorithm, in `order`. Unreached-goal rows count as
/// exceedances; ratios of every row enter the mean and median.
std::vector<AlgorithmAggregate> aggregate_rows(const std::vector<RunResult>& rows,
                                               const std::vector<std::string>& order);

struct RunOptions {
  std::size_t workers = 1;
  bool write_outputs = true;
};

/// Builds the corpus, runs every (map, algorithm, trial) and, when
/// options.write_outputs is set, writes CSV and JSON. Output bytes depend only
/// on the config, not on worker count or scheduling. Runaway trials become
/// rows with reached_goal = false. Throws ConfigError for bad configs
/// (including an empty corpus, unsolvable map files and generator failures),
/// std::runtime_error when outputs cannot be written.
ResultSet run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Fraction of the algorithm's rows with exceeded_epsilon. UsageError for an
/// unknown id.
double exceedance_rate(const ResultSet& results, const std::string& algorithm_id);

struct PolicySummary {
  AlgorithmAggregate aggregate;
  std::size_t map_wins = 0;  // maps where this algorithm has the lowest mean traveled cost (ties share)
};

struct Comparison {
  std::vector<PolicySummary> policies;
};

/// Side-by-side aggregates plus per-map win counts. UsageError with fewer than
/// two algorithms.
Comparison compare_policies(const ResultSet& results);

/// Fixed six-decimal rendering, round-half-even on the exact binary value.
std::string format_fixed6(double value);

std::string results_csv(const ResultSet& results);
std::string results_json(const ResultSet& results, const ExperimentConfig& config);
std::string comparison_csv(const Comparison& comparison);
std::string comparison_table(const Comparison& comparison);

/// Reads a results CSV written by results_csv. Aggregates are recomputed from
/// the integer columns. Throws ConfigError on malformed input.
ResultSet parse_results_csv(std::string_view text);

extern const char* const kResultsCsvHeader;

}  // namespace deastar
