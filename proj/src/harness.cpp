#include "deastar/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "deastar/dea_policy.hpp"
#include "deastar/errors.hpp"
#include "deastar/generators.hpp"
#include "deastar/map_io.hpp"
#include "deastar/oracle.hpp"
#include "deastar/rng.hpp"

namespace deastar {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const char* const kResultsCsvHeader =
    "map_id,algorithm_id,trial,seed,c_star,traveled,literal,ratio,exceeded_epsilon,mu,sum_sigma,"
    "aggressive_count,nonaggressive_count,reached_goal";

Policy AlgorithmSpec::policy() const {
  switch (kind) {
    case Kind::astar_replan: return AStarReplan{};
    case Kind::alpha_star: return AlphaStarPolicy{*alpha};
    case Kind::dea_star: return DeaStarPolicy{*pac};
  }
  throw std::logic_error("unknown algorithm kind");
}

// ---------------------------------------------------------------------------
// Config

namespace {

void require_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; }))
      throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError("missing '" + std::string(key) + "' in " + where);
  return *it;
}

double number(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number()) throw ConfigError("'" + std::string(key) + "' in " + where + " must be a number");
  return v.get<double>();
}

int positive_int(const json& obj, const char* key, const std::string& where, bool allow_zero = false) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<long long>() < (allow_zero ? 0 : 1) || v.get<long long>() > 1'000'000'000)
    throw ConfigError("'" + std::string(key) + "' in " + where + " must be a " +
                      (allow_zero ? "non-negative" : "positive") + " integer");
  return v.get<int>();
}

std::string text(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw ConfigError("'" + std::string(key) + "' in " + where + " must be a string");
  return v.get<std::string>();
}

CorpusSpec parse_corpus(const json& doc, const std::filesystem::path& base_dir) {
  const std::string where = "corpus";
  CorpusSpec spec;
  const std::string kind = text(doc, "kind", where);
  if (kind == "field") {
    require_keys(doc, where, {"kind", "width", "height", "density", "count"});
    spec.kind = CorpusSpec::Kind::field;
    spec.density = number(doc, "density", where);
  } else if (kind == "maze") {
    require_keys(doc, where, {"kind", "width", "height", "count"});
    spec.kind = CorpusSpec::Kind::maze;
  } else if (kind == "files") {
    require_keys(doc, where, {"kind", "maps"});
    spec.kind = CorpusSpec::Kind::files;
    const json& maps = field(doc, "maps", where);
    if (!maps.is_array()) throw ConfigError("'maps' in corpus must be an array of paths");
    for (const auto& m : maps) {
      if (!m.is_string()) throw ConfigError("'maps' in corpus must be an array of paths");
      std::filesystem::path p = m.get<std::string>();
      spec.maps.push_back((p.is_relative() ? base_dir / p : p).lexically_normal());
    }
    spec.count = static_cast<int>(spec.maps.size());
    return spec;
  } else {
    throw ConfigError("unknown corpus kind '" + kind + "' (expected field, maze or files)");
  }
  spec.width = positive_int(doc, "width", where);
  spec.height = positive_int(doc, "height", where);
  spec.count = positive_int(doc, "count", where, /*allow_zero=*/true);
  return spec;
}

std::string dump_number(const json& v) { return v.dump(); }

AlgorithmSpec parse_algorithm(const json& doc, std::size_t index) {
  const std::string where = "algorithms[" + std::to_string(index) + "]";
  AlgorithmSpec spec;
  const std::string kind = text(doc, "kind", where);
  std::string label;
  try {
    if (kind == "astar_replan") {
      require_keys(doc, where, {"kind", "id", "epsilon"});
      spec.kind = AlgorithmSpec::Kind::astar_replan;
      spec.epsilon = 0.0;
      label = "astar_replan";
    } else if (kind == "alpha_star") {
      require_keys(doc, where, {"kind", "id", "epsilon", "lambda", "Lambda", "perimeter"});
      spec.kind = AlgorithmSpec::Kind::alpha_star;
      spec.alpha.emplace(Rational::from_double(number(doc, "lambda", where)),
                         Rational::from_double(number(doc, "Lambda", where)),
                         parse_perimeter(text(doc, "perimeter", where)));
      spec.epsilon = epsilon_bound(*spec.alpha).to_double();
      label = "alpha_star(lambda=" + dump_number(doc["lambda"]) + ";Lambda=" + dump_number(doc["Lambda"]) +
              ";perimeter=" + to_string(spec.alpha->perimeter()) + ")";
    } else if (kind == "dea_star") {
      require_keys(doc, where, {"kind", "id", "epsilon", "delta", "lambda", "Lambda", "perimeter"});
      spec.kind = AlgorithmSpec::Kind::dea_star;
      const PerimeterFamily family =
          doc.contains("perimeter") ? parse_perimeter_family(text(doc, "perimeter", where)) : PerimeterFamily::g;
      spec.pac.emplace(number(doc, "epsilon", where), number(doc, "delta", where),
                       Rational::from_double(number(doc, "lambda", where)),
                       Rational::from_double(number(doc, "Lambda", where)), family);
      spec.epsilon = spec.pac->epsilon();
      label = "dea_star(epsilon=" + dump_number(doc["epsilon"]) + ";delta=" + dump_number(doc["delta"]) +
              ";lambda=" + dump_number(doc["lambda"]) + ";Lambda=" + dump_number(doc["Lambda"]) +
              ";perimeter=" + to_string(family) + ")";
    } else {
      throw ConfigError("unknown algorithm kind '" + kind + "' in " + where);
    }
    if (doc.contains("epsilon") && spec.kind != AlgorithmSpec::Kind::dea_star) {
      spec.epsilon = number(doc, "epsilon", where);
      if (!(spec.epsilon >= 0.0)) throw ConfigError("'epsilon' in " + where + " must be >= 0");
    }
  } catch (const UsageError& e) {
    throw ConfigError(where + ": " + e.what());
  }

  spec.id = doc.contains("id") ? text(doc, "id", where) : label;
  if (spec.id.empty() || spec.id.find_first_of(",\"\n\r") != std::string::npos)
    throw ConfigError("algorithm id in " + where + " must be non-empty and free of commas, quotes and newlines");
  return spec;
}

SensingMode parse_sensing(const json& doc) {
  const std::string kind = text(doc, "kind", "sensing");
  if (kind == "omniscient") {
    require_keys(doc, "sensing", {"kind"});
    return SensingMode::omniscient();
  }
  if (kind == "radius") {
    require_keys(doc, "sensing", {"kind", "radius"});
    return SensingMode::within(positive_int(doc, "radius", "sensing"));
  }
  throw ConfigError("unknown sensing kind '" + kind + "' (expected omniscient or radius)");
}

}  // namespace

ExperimentConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
  try {
    require_keys(doc, "config",
                 {"master_seed", "corpus", "algorithms", "sensing", "trials_per_map", "output", "heuristic",
                  "step_budget"});
    ExperimentConfig cfg;
    const json& seed = field(doc, "master_seed", "config");
    if (!seed.is_number_integer() || (seed.is_number_integer() && !seed.is_number_unsigned() && seed.get<long long>() < 0))
      throw ConfigError("'master_seed' must be a non-negative integer");
    cfg.master_seed = seed.get<std::uint64_t>();
    cfg.corpus = parse_corpus(field(doc, "corpus", "config"), base_dir);

    const json& algorithms = field(doc, "algorithms", "config");
    if (!algorithms.is_array() || algorithms.empty()) throw ConfigError("'algorithms' must be a non-empty array");
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
      AlgorithmSpec spec = parse_algorithm(algorithms[i], i);
      const int n = ++seen[spec.id];
      if (n > 1) spec.id += "#" + std::to_string(n);
      cfg.algorithms.push_back(std::move(spec));
    }

    cfg.sensing = parse_sensing(field(doc, "sensing", "config"));
    cfg.trials_per_map = positive_int(doc, "trials_per_map", "config");

    const json& output = field(doc, "output", "config");
    require_keys(output, "output", {"csv", "json"});
    const std::filesystem::path csv = text(output, "csv", "output");
    const std::filesystem::path js = text(output, "json", "output");
    cfg.output.csv = (csv.is_relative() ? base_dir / csv : csv).lexically_normal();
    cfg.output.json = (js.is_relative() ? base_dir / js : js).lexically_normal();

    if (doc.contains("heuristic")) cfg.heuristic = parse_heuristic(text(doc, "heuristic", "config"));
    if (doc.contains("step_budget")) cfg.step_budget = static_cast<std::size_t>(positive_int(doc, "step_budget", "config"));
    return cfg;
  } catch (const UsageError& e) {
    throw ConfigError(e.what());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_config(doc, path.parent_path());
}

std::uint64_t corpus_seed(std::uint64_t master_seed, std::size_t map_index) {
  return split_seed(master_seed, {map_index});
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t map_index, std::size_t algorithm_index,
                         std::size_t trial) {
  return split_seed(master_seed, {map_index, algorithm_index, trial});
}

// ---------------------------------------------------------------------------
// Aggregation

std::vector<AlgorithmAggregate> aggregate_rows(const std::vector<RunResult>& rows,
                                               const std::vector<std::string>& order) {
  std::vector<AlgorithmAggregate> out;
  for (const auto& id : order) {
    AlgorithmAggregate agg;
    agg.algorithm_id = id;
    std::vector<double> ratios;
    double ratio_sum = 0.0, mu_sum = 0.0, sigma_sum = 0.0;
    std::size_t exceeded = 0;
    for (const auto& r : rows) {
      if (r.algorithm_id != id) continue;
      ++agg.rows;
      ratios.push_back(r.ratio);
      ratio_sum += r.ratio;
      mu_sum += static_cast<double>(r.mu);
      sigma_sum += static_cast<double>(r.sum_sigma);
      if (r.exceeded_epsilon) ++exceeded;
    }
    if (agg.rows > 0) {
      const auto n = static_cast<double>(agg.rows);
      agg.mean_ratio = ratio_sum / n;
      agg.mean_mu = mu_sum / n;
      agg.mean_sum_sigma = sigma_sum / n;
      agg.exceedance_rate = static_cast<double>(exceeded) / n;
      std::sort(ratios.begin(), ratios.end());
      const std::size_t mid = ratios.size() / 2;
      agg.median_ratio = ratios.size() % 2 == 1 ? ratios[mid] : (ratios[mid - 1] + ratios[mid]) / 2.0;
    }
    out.push_back(agg);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Execution

namespace {

struct Corpus {
  std::vector<GridMap> maps;
  std::vector<CorpusEntry> entries;
};

Corpus build_corpus(const ExperimentConfig& config) {
  const CorpusSpec& spec = config.corpus;
  if (spec.count <= 0) throw ConfigError("corpus is empty");
  Corpus corpus;
  for (std::size_t i = 0; i < static_cast<std::size_t>(spec.count); ++i) {
    CorpusEntry entry;
    entry.map_id = i;
    try {
      switch (spec.kind) {
        case CorpusSpec::Kind::field: {
          GeneratedMap g = generate_obstacle_field(spec.width, spec.height, spec.density,
                                                   corpus_seed(config.master_seed, i));
          entry.retries = g.retries;
          entry.source = "field";
          corpus.maps.push_back(std::move(g.map));
          break;
        }
        case CorpusSpec::Kind::maze:
          entry.source = "maze";
          corpus.maps.push_back(generate_maze(spec.width, spec.height, corpus_seed(config.master_seed, i)));
          break;
        case CorpusSpec::Kind::files:
          entry.source = spec.maps[i].generic_string();
          corpus.maps.push_back(load_map(spec.maps[i]));
          break;
      }
    } catch (const UsageError& e) {
      throw ConfigError("corpus map " + std::to_string(i) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ConfigError("corpus map " + entry.source + ": " + e.what());
    } catch (const GenerationError& e) {
      throw ConfigError("corpus map " + std::to_string(i) + ": " + e.what());
    }
    const OracleResult oracle = dijkstra_cost(corpus.maps.back());
    if (!oracle.reachable()) throw ConfigError("corpus map " + std::to_string(i) + " is unsolvable");
    entry.c_star = *oracle.cost;
    corpus.entries.push_back(std::move(entry));
  }
  return corpus;
}

void check_writable(const std::filesystem::path& path) {
  if (path.empty()) throw ConfigError("output path is empty");
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream probe(path, std::ios::binary | std::ios::app);
  if (!probe) throw ConfigError("output path " + path.string() + " is not writable");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

double rounded6(double value) { return std::strtod(format_fixed6(value).c_str(), nullptr); }

}  // namespace

ResultSet run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  if (config.algorithms.empty()) throw ConfigError("no algorithms configured");
  if (config.trials_per_map < 1) throw ConfigError("trials_per_map must be positive");
  if (options.write_outputs) {
    check_writable(config.output.csv);
    check_writable(config.output.json);
  }

  const Corpus corpus = build_corpus(config);
  const std::size_t n_maps = corpus.maps.size();
  const std::size_t n_algos = config.algorithms.size();
  const auto n_trials = static_cast<std::size_t>(config.trials_per_map);
  const std::size_t total = n_maps * n_algos * n_trials;

  ResultSet results;
  results.corpus = corpus.entries;
  for (const auto& a : config.algorithms) results.algorithm_order.push_back(a.id);
  results.rows.resize(total);
  std::vector<std::uint8_t> valid(total, 1);
  std::vector<std::uint8_t> runaway(total, 0);

  const RealtimeOptions rt_options{config.step_budget};
  auto run_job = [&](std::size_t job) {
    const std::size_t m = job / (n_algos * n_trials);
    const std::size_t a = (job / n_trials) % n_algos;
    const std::size_t t = job % n_trials;
    const AlgorithmSpec& algo = config.algorithms[a];
    const GridMap& map = corpus.maps[m];
    const Cost c_star = corpus.entries[m].c_star;

    RunResult row;
    row.map_id = m;
    row.algorithm_id = algo.id;
    row.trial = t;
    row.seed = trial_seed(config.master_seed, m, a, t);
    row.c_star = c_star;

    RealtimeOutcome outcome;
    try {
      outcome = execute_realtime(map, config.heuristic, algo.policy(), config.sensing, row.seed, rt_options);
    } catch (const RunawayError& e) {
      outcome.trace = e.trace();
      outcome.trace.reached_goal = false;
      runaway[job] = 1;
    }
    const Trace& trace = outcome.trace;
    row.traveled = traveled_cost(trace);
    row.literal = literal_cost(trace);
    row.ratio = static_cast<double>(row.traveled) / static_cast<double>(c_star);
    row.exceeded_epsilon = exceedance_indicator(trace, c_star, algo.epsilon);
    row.mu = trace.mu();
    row.sum_sigma = trace.sum_sigma();
    row.aggressive_count = outcome.aggressive_count;
    row.nonaggressive_count = outcome.non_aggressive_count;
    row.reached_goal = trace.reached_goal;
    valid[job] = validate_trace(map, trace, c_star).ok() ? 1 : 0;
    results.rows[job] = std::move(row);
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, total));
  if (workers == 1) {
    for (std::size_t job = 0; job < total; ++job) run_job(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t job = next++; job < total; job = next++) {
          try {
            run_job(job);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  results.traces_checked = total;
  results.traces_invalid = static_cast<std::size_t>(std::count(valid.begin(), valid.end(), std::uint8_t{0}));
  results.runaway_trials = static_cast<std::size_t>(std::count(runaway.begin(), runaway.end(), std::uint8_t{1}));
  results.aggregates = aggregate_rows(results.rows, results.algorithm_order);

  if (options.write_outputs) {
    write_file(config.output.csv, results_csv(results));
    write_file(config.output.json, results_json(results, config));
  }
  return results;
}

double exceedance_rate(const ResultSet& results, const std::string& algorithm_id) {
  std::size_t rows = 0, exceeded = 0;
  for (const auto& r : results.rows) {
    if (r.algorithm_id != algorithm_id) continue;
    ++rows;
    if (r.exceeded_epsilon) ++exceeded;
  }
  if (rows == 0) throw UsageError("unknown algorithm '" + algorithm_id + "'");
  return static_cast<double>(exceeded) / static_cast<double>(rows);
}

Comparison compare_policies(const ResultSet& results) {
  if (results.algorithm_order.size() < 2) throw UsageError("comparison needs at least two algorithms");
  Comparison cmp;
  const auto aggregates = aggregate_rows(results.rows, results.algorithm_order);

  // map -> algorithm -> (sum traveled, count)
  std::map<std::size_t, std::map<std::string, std::pair<double, std::size_t>>> per_map;
  for (const auto& r : results.rows) {
    auto& cell = per_map[r.map_id][r.algorithm_id];
    cell.first += static_cast<double>(r.traveled);
    ++cell.second;
  }
  std::map<std::string, std::size_t> wins;
  for (const auto& [map_id, by_algo] : per_map) {
    double best = 0.0;
    bool first = true;
    for (const auto& [id, acc] : by_algo) {
      const double mean = acc.first / static_cast<double>(acc.second);
      if (first || mean < best) best = mean;
      first = false;
    }
    for (const auto& [id, acc] : by_algo)
      if (acc.first / static_cast<double>(acc.second) == best) ++wins[id];
  }
  for (const auto& agg : aggregates) cmp.policies.push_back(PolicySummary{agg, wins[agg.algorithm_id]});
  return cmp;
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_fixed6(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  if (res.ec != std::errc()) throw std::runtime_error("number formatting failed");
  std::string out(buf, res.ptr);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::string results_csv(const ResultSet& results) {
  std::string out = kResultsCsvHeader;
  out += '\n';
  for (const auto& r : results.rows) {
    out += std::to_string(r.map_id) + ',' + r.algorithm_id + ',' + std::to_string(r.trial) + ',' +
           std::to_string(r.seed) + ',' + std::to_string(r.c_star) + ',' + std::to_string(r.traveled) + ',' +
           std::to_string(r.literal) + ',' + format_fixed6(r.ratio) + ',' + (r.exceeded_epsilon ? "true" : "false") +
           ',' + std::to_string(r.mu) + ',' + std::to_string(r.sum_sigma) + ',' + std::to_string(r.aggressive_count) +
           ',' + std::to_string(r.nonaggressive_count) + ',' + (r.reached_goal ? "true" : "false") + '\n';
  }
  return out;
}

namespace {

ordered_json aggregate_json(const AlgorithmAggregate& a) {
  ordered_json j;
  j["algorithm_id"] = a.algorithm_id;
  j["rows"] = a.rows;
  j["mean_ratio"] = rounded6(a.mean_ratio);
  j["median_ratio"] = rounded6(a.median_ratio);
  j["exceedance_rate"] = rounded6(a.exceedance_rate);
  j["mean_mu"] = rounded6(a.mean_mu);
  j["mean_sum_sigma"] = rounded6(a.mean_sum_sigma);
  return j;
}

ordered_json config_echo(const ExperimentConfig& c) {
  ordered_json j;
  j["master_seed"] = c.master_seed;
  ordered_json corpus;
  switch (c.corpus.kind) {
    case CorpusSpec::Kind::field:
      corpus["kind"] = "field";
      corpus["width"] = c.corpus.width;
      corpus["height"] = c.corpus.height;
      corpus["density"] = c.corpus.density;
      corpus["count"] = c.corpus.count;
      break;
    case CorpusSpec::Kind::maze:
      corpus["kind"] = "maze";
      corpus["width"] = c.corpus.width;
      corpus["height"] = c.corpus.height;
      corpus["count"] = c.corpus.count;
      break;
    case CorpusSpec::Kind::files: {
      corpus["kind"] = "files";
      auto maps = ordered_json::array();
      for (const auto& p : c.corpus.maps) maps.push_back(p.filename().generic_string());
      corpus["maps"] = std::move(maps);
      break;
    }
  }
  j["corpus"] = std::move(corpus);
  auto algos = ordered_json::array();
  for (const auto& a : c.algorithms) {
    ordered_json aj;
    aj["id"] = a.id;
    switch (a.kind) {
      case AlgorithmSpec::Kind::astar_replan: aj["kind"] = "astar_replan"; break;
      case AlgorithmSpec::Kind::alpha_star:
        aj["kind"] = "alpha_star";
        aj["lambda"] = a.alpha->inside_weight().to_string();
        aj["Lambda"] = a.alpha->outside_weight().to_string();
        aj["perimeter"] = to_string(a.alpha->perimeter());
        break;
      case AlgorithmSpec::Kind::dea_star:
        aj["kind"] = "dea_star";
        aj["delta"] = a.pac->delta();
        aj["lambda"] = a.pac->inside_weight().to_string();
        aj["Lambda"] = a.pac->outside_weight().to_string();
        aj["perimeter"] = to_string(a.pac->family());
        break;
    }
    aj["epsilon"] = a.epsilon;
    algos.push_back(std::move(aj));
  }
  j["algorithms"] = std::move(algos);
  ordered_json sensing;
  sensing["kind"] = c.sensing.kind == SensingMode::Kind::omniscient ? "omniscient" : "radius";
  if (c.sensing.kind == SensingMode::Kind::radius) sensing["radius"] = c.sensing.radius;
  j["sensing"] = std::move(sensing);
  j["trials_per_map"] = c.trials_per_map;
  j["heuristic"] = to_string(c.heuristic);
  j["step_budget"] = c.step_budget;
  return j;
}

}  // namespace

std::string results_json(const ResultSet& results, const ExperimentConfig& config) {
  ordered_json j;
  j["config"] = config_echo(config);

  auto corpus = ordered_json::array();
  for (const auto& e : results.corpus) {
    ordered_json ej;
    ej["map_id"] = e.map_id;
    ej["source"] = config.corpus.kind == CorpusSpec::Kind::files
                       ? std::filesystem::path(e.source).filename().generic_string()
                       : e.source;
    ej["c_star"] = e.c_star;
    ej["retries"] = e.retries;
    corpus.push_back(std::move(ej));
  }
  j["corpus"] = std::move(corpus);

  auto rows = ordered_json::array();
  for (const auto& r : results.rows) {
    ordered_json rj;
    rj["map_id"] = r.map_id;
    rj["algorithm_id"] = r.algorithm_id;
    rj["trial"] = r.trial;
    rj["seed"] = r.seed;
    rj["c_star"] = r.c_star;
    rj["traveled"] = r.traveled;
    rj["literal"] = r.literal;
    rj["ratio"] = rounded6(r.ratio);
    rj["exceeded_epsilon"] = r.exceeded_epsilon;
    rj["mu"] = r.mu;
    rj["sum_sigma"] = r.sum_sigma;
    rj["aggressive_count"] = r.aggressive_count;
    rj["nonaggressive_count"] = r.nonaggressive_count;
    rj["reached_goal"] = r.reached_goal;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);

  auto aggregates = ordered_json::array();
  for (const auto& a : results.aggregates) aggregates.push_back(aggregate_json(a));
  j["aggregates"] = std::move(aggregates);

  // Exceedance of (1 + epsilon) C* per algorithm. For delta-gated runs the
  // comparison against delta is a measurement, not a guarantee.
  auto pac = ordered_json::array();
  for (std::size_t i = 0; i < config.algorithms.size(); ++i) {
    const auto& algo = config.algorithms[i];
    const auto& agg = results.aggregates[i];
    ordered_json pj;
    pj["algorithm_id"] = algo.id;
    pj["epsilon"] = algo.epsilon;
    if (algo.pac) {
      pj["delta"] = algo.pac->delta();
    } else {
      pj["delta"] = nullptr;
    }
    pj["exceedance_rate"] = rounded6(agg.exceedance_rate);
    pj["mean_mu"] = rounded6(agg.mean_mu);
    pj["mean_sum_sigma"] = rounded6(agg.mean_sum_sigma);
    if (algo.pac) {
      pj["measured_rate_at_most_delta"] = agg.exceedance_rate <= algo.pac->delta();
    } else {
      pj["measured_rate_at_most_delta"] = nullptr;
    }
    pac.push_back(std::move(pj));
  }
  j["pac_report"] = std::move(pac);

  ordered_json checks;
  checks["checked"] = results.traces_checked;
  checks["invalid"] = results.traces_invalid;
  checks["runaway"] = results.runaway_trials;
  j["trace_checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string comparison_csv(const Comparison& comparison) {
  std::string out =
      "algorithm_id,rows,mean_ratio,median_ratio,mean_mu,mean_sum_sigma,exceedance_rate,map_wins\n";
  for (const auto& p : comparison.policies) {
    const auto& a = p.aggregate;
    out += a.algorithm_id + ',' + std::to_string(a.rows) + ',' + format_fixed6(a.mean_ratio) + ',' +
           format_fixed6(a.median_ratio) + ',' + format_fixed6(a.mean_mu) + ',' + format_fixed6(a.mean_sum_sigma) +
           ',' + format_fixed6(a.exceedance_rate) + ',' + std::to_string(p.map_wins) + '\n';
  }
  return out;
}

std::string comparison_table(const Comparison& comparison) {
  std::size_t id_width = std::string("algorithm").size();
  for (const auto& p : comparison.policies) id_width = std::max(id_width, p.aggregate.algorithm_id.size());

  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(id_width)) << "algorithm" << std::right << std::setw(7) << "rows"
     << std::setw(12) << "mean ratio" << std::setw(12) << "med ratio" << std::setw(12) << "mean mu" << std::setw(14)
     << "mean sigma" << std::setw(12) << "exceed" << std::setw(7) << "wins" << '\n';
  for (const auto& p : comparison.policies) {
    const auto& a = p.aggregate;
    os << std::left << std::setw(static_cast<int>(id_width)) << a.algorithm_id << std::right << std::setw(7) << a.rows
       << std::setw(12) << format_fixed6(a.mean_ratio) << std::setw(12) << format_fixed6(a.median_ratio)
       << std::setw(12) << format_fixed6(a.mean_mu) << std::setw(14) << format_fixed6(a.mean_sum_sigma)
       << std::setw(12) << format_fixed6(a.exceedance_rate) << std::setw(7) << p.map_wins << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = line.find(',', pos);
    out.emplace_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <typename T>
T parse_integer(const std::string& s, std::size_t line) {
  T value{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("results line " + std::to_string(line) + ": bad integer '" + s + "'");
  return value;
}

bool parse_bool(const std::string& s, std::size_t line) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ConfigError("results line " + std::to_string(line) + ": bad boolean '" + s + "'");
}

}  // namespace

ResultSet parse_results_csv(std::string_view text) {
  ResultSet results;
  std::size_t line_no = 0;
  std::set<std::string> known;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != kResultsCsvHeader) throw ConfigError("results CSV header does not match the expected columns");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 14)
      throw ConfigError("results line " + std::to_string(line_no) + ": expected 14 fields, found " +
                        std::to_string(f.size()));
    RunResult r;
    r.map_id = parse_integer<std::size_t>(f[0], line_no);
    r.algorithm_id = f[1];
    r.trial = parse_integer<std::size_t>(f[2], line_no);
    r.seed = parse_integer<std::uint64_t>(f[3], line_no);
    r.c_star = parse_integer<Cost>(f[4], line_no);
    r.traveled = parse_integer<Cost>(f[5], line_no);
    r.literal = parse_integer<Cost>(f[6], line_no);
    if (r.c_star <= 0) throw ConfigError("results line " + std::to_string(line_no) + ": c_star must be positive");
    r.ratio = static_cast<double>(r.traveled) / static_cast<double>(r.c_star);
    r.exceeded_epsilon = parse_bool(f[8], line_no);
    r.mu = parse_integer<std::size_t>(f[9], line_no);
    r.sum_sigma = parse_integer<std::int64_t>(f[10], line_no);
    r.aggressive_count = parse_integer<std::size_t>(f[11], line_no);
    r.nonaggressive_count = parse_integer<std::size_t>(f[12], line_no);
    r.reached_goal = parse_bool(f[13], line_no);
    if (known.insert(r.algorithm_id).second) results.algorithm_order.push_back(r.algorithm_id);
    results.rows.push_back(std::move(r));
  }
  if (line_no == 0) throw ConfigError("results CSV is empty");
  results.aggregates = aggregate_rows(results.rows, results.algorithm_order);
  return results;
}

}  // namespace deastar
