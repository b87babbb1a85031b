// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "deastar/alpha_star.hpp"
#include "deastar/dea_gate.hpp"
#include "deastar/harness.hpp"
#include "deastar/map_io.hpp"
#include "deastar/oracle.hpp"
#include "deastar/search_state.hpp"
#include "support.hpp"

using namespace deastar;
namespace fs = std::filesystem;

namespace {

constexpr Perimeter kPerimeters[] = {Perimeter::g_nonaggressive, Perimeter::h_nonaggressive, Perimeter::g_aggressive,
                                     Perimeter::h_aggressive};

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::size_t g_traces_validated = 0;
std::size_t g_traces_invalid = 0;

void check_trace(const GridMap& map, const Trace& trace, std::optional<Cost> c_star) {
  ++g_traces_validated;
  if (!validate_trace(map, trace, c_star).ok()) ++g_traces_invalid;
}

int run(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && limit_seconds > 0 && secs > limit_seconds) {
    out.ok = false;
    out.detail += " (time limit " + std::to_string(limit_seconds) + " s exceeded)";
  }
  std::printf("%s [%d] %s: %s (%.2f s)\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), out.detail.c_str(), secs);
  std::fflush(stdout);
  return out.ok ? 0 : 1;
}

Outcome astar_reduction(const std::vector<GridMap>& maps) {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Cost c_star = *dijkstra_cost(maps[i]).cost;
    for (Perimeter p : kPerimeters) {
      const SearchResult r = alpha_star(maps[i], Heuristic::manhattan, AlphaParams(0, 0, p));
      if (!r.found() || *r.cost != c_star)
        return {false, "map " + std::to_string(i) + " perimeter " + to_string(p) + " cost differs from C*"};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " searches equal dijkstra_cost exactly"};
}

Outcome bound_holds(const std::vector<GridMap>& maps) {
  const std::pair<Rational, Rational> weights[] = {
      {0, Rational(1, 2)}, {0, 1}, {Rational(1, 5), 1}, {Rational(-1, 2), 0}};
  std::size_t checked = 0, strict = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Cost c_star = *dijkstra_cost(maps[i]).cost;
    for (const auto& [lam, Lam] : weights) {
      for (Perimeter p : kPerimeters) {
        const AlphaParams params(lam, Lam, p);
        const SearchResult r = alpha_star(maps[i], Heuristic::manhattan, params);
        if (!r.found()) return {false, "map " + std::to_string(i) + " not solved"};
        if (Rational(*r.cost) > suboptimality_factor(params) * Rational(c_star))
          return {false, "map " + std::to_string(i) + " " + to_string(p) + " lambda " + lam.to_string() +
                             " Lambda " + Lam.to_string() + ": cost " + std::to_string(*r.cost) + " > bound"};
        if (*r.cost > c_star) ++strict;
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " searches within (1+Lambda)/(1+lambda) C*, " + std::to_string(strict) +
                    " strictly suboptimal"};
}

Outcome oracle_equivalence() {
  SplitMix64 rng(4444);
  std::size_t agree = 0, unreachable = 0;
  std::vector<GridMap> maps;
  for (int i = 0; i < 100; ++i) maps.push_back(support::random_small_map(rng, 4, 4, 0.3));
  for (GridMap& m : support::hand_written_maps()) maps.push_back(std::move(m));
  for (const GridMap& map : maps) {
    const auto brute = enumerate_paths(map, map.start(), map.goal());
    const OracleResult d = dijkstra_cost(map);
    if (brute.has_value() != d.reachable() || (brute && *brute != *d.cost))
      return {false, "disagreement on\n" + render_map(map)};
    if (!brute) ++unreachable;
    ++agree;
  }
  return {true, std::to_string(agree) + " maps agree (" + std::to_string(unreachable) + " unreachable)"};
}

Outcome dominance() {
  const auto pairs = support::ordered_trace_pairs(500, 31337);
  std::size_t strict = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (dominance_check(p.bounded, p.unbounded) != Dominance::dominates)
      return {false, "pair " + std::to_string(i) + " not ordered by construction"};
    const Cost b = literal_cost(p.bounded), u = literal_cost(p.unbounded);
    if (b > u) return {false, "pair " + std::to_string(i) + ": literal cost " + std::to_string(b) + " > " + std::to_string(u)};
    if (b < u) ++strict;
    ++g_traces_validated;
  }
  return {true, "500 ordered pairs satisfy literal_cost(b) <= literal_cost(u), " + std::to_string(strict) + " strict"};
}

Outcome gate_calibration() {
  // A state whose priority front is a terminated promissory path: every
  // choose() call is a forced termination event.
  SearchState s(11, 10, {5, 9}, Heuristic::manhattan);
  const AlphaParams p(0, 1, Perimeter::g_aggressive);
  const Passable free = [](Cell) { return true; };
  s.insert_start({5, 0}, p);
  for (const Cell c : {Cell{5, 0}, Cell{6, 0}, Cell{7, 0}, Cell{5, 1}}) {
    s.take(c);
    s.expand(c, p, free);
  }
  if (!promissory_terminated(s.best_by_priority(), s)) return {false, "fixture front is not terminated"};

  const int n = 100000;
  std::ostringstream detail;
  bool ok = true;
  std::uint64_t seed = 1;
  for (double delta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    DeaGate gate(PacParams(1.0, delta, 0, 1), split_seed(0xca11b, {seed++}));
    for (int i = 0; i < n; ++i) gate.choose(s);
    if (gate.decisions().size() != static_cast<std::size_t>(n)) return {false, "not every call was a termination"};
    const double freq = static_cast<double>(gate.aggressive_count()) / n;
    const double tol = 3.0 * std::sqrt(delta * (1.0 - delta) / n);
    const bool hit = std::fabs(freq - (1.0 - delta)) <= tol;
    ok = ok && hit;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%sdelta=%.1f: %.4f vs %.1f +/- %.4f", delta == 0.1 ? "" : "; ", delta, freq,
                  1.0 - delta, tol);
    detail << buf;
  }
  return {ok, detail.str()};
}

Outcome trace_sweep(const std::vector<GridMap>& maps) {
  const std::vector<Policy> policies{AStarReplan{},
                                     AlphaStarPolicy{AlphaParams(0, 1, Perimeter::g_nonaggressive)},
                                     AlphaStarPolicy{AlphaParams(0, 1, Perimeter::g_aggressive)},
                                     AlphaStarPolicy{AlphaParams(Rational(1, 5), 1, Perimeter::h_aggressive)},
                                     DeaStarPolicy{PacParams(1.0, 0.5, 0, 1)},
                                     DeaStarPolicy{PacParams(1.0, 0.3, 0, 1, PerimeterFamily::h)}};
  const SensingMode modes[] = {SensingMode::omniscient(), SensingMode::within(1), SensingMode::within(2)};
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Cost c_star = *dijkstra_cost(maps[i]).cost;
    for (std::size_t a = 0; a < policies.size(); ++a)
      for (const SensingMode& m : modes)
        check_trace(maps[i], execute_realtime(maps[i], Heuristic::manhattan, policies[a], m, split_seed(i, {a})).trace,
                    c_star);
  }
  return {true, ""};
}

std::string read_bytes(const fs::path& p) { return support::read_text(p.string()); }

struct ReferenceRuns {
  std::string csv_a, json_a, csv_b, json_b, csv_par, json_par;
  ResultSet results;
  ExperimentConfig cfg;
};

ReferenceRuns reference_runs() {
  ReferenceRuns r;
  r.cfg = load_config(DEASTAR_CONFIG_DIR "/reference.json");
  const fs::path dir = fs::temp_directory_path() / "deastar_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto run_into = [&](const std::string& tag, std::size_t workers, std::string& csv, std::string& json) {
    ExperimentConfig c = r.cfg;
    c.output.csv = dir / (tag + ".csv");
    c.output.json = dir / (tag + ".json");
    ResultSet res = run_experiment(c, RunOptions{workers, true});
    csv = read_bytes(c.output.csv);
    json = read_bytes(c.output.json);
    return res;
  };
  r.results = run_into("serial_a", 1, r.csv_a, r.json_a);
  run_into("serial_b", 1, r.csv_b, r.json_b);
  run_into("parallel", 4, r.csv_par, r.json_par);
  return r;
}

Outcome determinism(const ReferenceRuns& r) {
  const std::size_t expected_rows = 30u * r.cfg.algorithms.size() * 20u;
  if (r.results.rows.size() != expected_rows)
    return {false, "row count " + std::to_string(r.results.rows.size()) + " != " + std::to_string(expected_rows)};
  if (r.csv_a != r.csv_b || r.json_a != r.json_b) return {false, "serial reruns differ"};
  if (r.csv_a != r.csv_par || r.json_a != r.json_par) return {false, "serial and parallel outputs differ"};
  g_traces_validated += r.results.traces_checked * 3;
  g_traces_invalid += r.results.traces_invalid * 3;
  return {true, std::to_string(expected_rows) + " rows; CSV " + std::to_string(r.csv_a.size()) + " B and JSON " +
                    std::to_string(r.json_a.size()) + " B identical across 2 serial runs and 1 run on 4 workers"};
}

Outcome pac_report(const ReferenceRuns& r) {
  const auto report = nlohmann::json::parse(r.json_a);
  const auto& pac = report.at("pac_report");
  if (pac.size() != r.cfg.algorithms.size()) return {false, "pac_report has wrong length"};

  // Recompute every figure from the CSV integer columns.
  const ResultSet parsed = parse_results_csv(r.csv_a);
  std::ostringstream detail;
  for (std::size_t i = 0; i < r.cfg.algorithms.size(); ++i) {
    const AlgorithmSpec& algo = r.cfg.algorithms[i];
    std::size_t rows = 0, exceeded = 0;
    double mu = 0, sigma = 0;
    for (const auto& row : parsed.rows) {
      if (row.algorithm_id != algo.id) continue;
      ++rows;
      const bool ex = !row.reached_goal ||
                      Rational(row.traveled) > (Rational(1) + Rational::from_double(algo.epsilon)) * Rational(row.c_star);
      if (ex != row.exceeded_epsilon) return {false, "exceeded_epsilon column disagrees with traveled/c_star"};
      if (ex) ++exceeded;
      mu += static_cast<double>(row.mu);
      sigma += static_cast<double>(row.sum_sigma);
    }
    const auto& e = pac[i];
    const double rate = static_cast<double>(exceeded) / static_cast<double>(rows);
    if (e.at("algorithm_id") != algo.id) return {false, "pac_report order differs from config"};
    if (format_fixed6(e.at("exceedance_rate").get<double>()) != format_fixed6(rate) ||
        format_fixed6(e.at("mean_mu").get<double>()) != format_fixed6(mu / static_cast<double>(rows)) ||
        format_fixed6(e.at("mean_sum_sigma").get<double>()) != format_fixed6(sigma / static_cast<double>(rows)))
      return {false, "report entry for " + algo.id + " is not recomputable from rows"};
    if (algo.pac) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s(eps=%g, delta=%g): P[exceed]=%.4f, rate<=delta %s", i == 3 ? "" : "; ",
                    algo.epsilon, algo.pac->delta(), rate, rate <= algo.pac->delta() ? "held" : "not observed");
      detail << buf;
    }
  }
  detail << " [measured hypothesis, not asserted]";
  return {true, detail.str()};
}

}  // namespace

int main() {
  int failures = 0;
  const auto maps = support::field_corpus(200);

  failures += run(1, "A*-reduction (lambda=Lambda=0, 200 maps x 4 perimeters)", 5.0, [&] { return astar_reduction(maps); });
  failures += run(2, "Worst-case bound (4 weight pairs x 4 perimeters x 200 maps)", 30.0, [&] { return bound_holds(maps); });
  failures += run(3, "Oracle equivalence (100 random 4x4 + 20 hand-written)", 5.0, oracle_equivalence);
  failures += run(4, "Dominance (500 ordered trace pairs)", 2.0, dominance);
  failures += run(5, "Gate calibration (1e5 forced terminations per delta)", 2.0, gate_calibration);

  ReferenceRuns ref;
  failures += run(7, "Determinism (reference config, serial x2 vs parallel)", 60.0, [&] {
    ref = reference_runs();
    return determinism(ref);
  });
  failures += run(8, "PAC measurement report", 0.0, [&] {
    if (ref.csv_a.empty()) return Outcome{false, "reference run unavailable"};
    return pac_report(ref);
  });
  failures += run(6, "Trace validity (every engine trace in this suite)", 0.0, [&] {
    trace_sweep(maps);
    return Outcome{g_traces_invalid == 0, std::to_string(g_traces_validated) + " traces checked, " +
                                              std::to_string(g_traces_invalid) + " invalid"};
  });

  std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
