#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "deastar/dea_gate.hpp"
#include "deastar/dea_policy.hpp"
#include "deastar/errors.hpp"
#include "deastar/map_io.hpp"
#include "deastar/oracle.hpp"
#include "deastar/search_state.hpp"
#include "support.hpp"

using namespace deastar;

namespace {

const Passable kAllFree = [](Cell) { return true; };

// 11x10 empty grid, start (5,0), goal (5,9). After expanding the start, OPEN
// holds (5,1) with f = 9 and (6,0), (4,0) with f = 11.
SearchState fanned_out_state() {
  SearchState s(11, 10, {5, 9}, Heuristic::manhattan);
  const AlphaParams p(0, 1, Perimeter::g_aggressive);
  s.insert_start({5, 0}, p);
  s.take({5, 0});
  s.expand({5, 0}, p, kAllFree);
  return s;
}

GridMap seed42_map() {
  return parse_map(support::read_text(support::golden_path("field_20x20_d0.25_s42.map")));
}

}  // namespace

TEST(PacParams, Validation) {
  EXPECT_THROW(PacParams(1.0, 0.0, 0, 1), UsageError);
  EXPECT_THROW(PacParams(1.0, 1.0, 0, 1), UsageError);
  EXPECT_THROW(PacParams(-0.1, 0.5, 0, 1), UsageError);
  EXPECT_THROW(PacParams(1.0, 0.5, 1, 0), UsageError);
  const PacParams p(1.0, 0.3, 0, 1, PerimeterFamily::h);
  EXPECT_EQ(p.aggressive().perimeter(), Perimeter::h_aggressive);
  EXPECT_EQ(p.non_aggressive().perimeter(), Perimeter::h_nonaggressive);
  EXPECT_FALSE(p.warning().has_value());
  EXPECT_TRUE(PacParams(0.5, 0.3, 0, 1).warning().has_value());
  EXPECT_EQ(parse_perimeter_family("g"), PerimeterFamily::g);
  EXPECT_THROW(parse_perimeter_family("x"), UsageError);
}

TEST(PromissoryTermination, StrictInequality) {
  const SearchState s = fanned_out_state();
  EXPECT_EQ(s.open_min_f(), 9);
  EXPECT_TRUE(promissory_terminated(*s.record({6, 0}), s));   // 11 > 9
  EXPECT_FALSE(promissory_terminated(*s.record({5, 1}), s));  // global minimum
}

TEST(PromissoryTermination, EqualFIsNotTerminated) {
  SearchState s = fanned_out_state();
  const AlphaParams p(0, 1, Perimeter::g_aggressive);
  s.take({5, 1});
  s.expand({5, 1}, p, kAllFree);
  // (5,2) ties the OPEN minimum exactly.
  EXPECT_EQ(s.record({5, 2})->f, s.open_min_f());
  EXPECT_FALSE(promissory_terminated(*s.record({5, 2}), s));
}

TEST(PromissoryTermination, EmptyOpenIsAnError) {
  SearchState s(2, 1, {1, 0}, Heuristic::manhattan);
  s.insert_start({0, 0}, AlphaParams::astar());
  const NodeRecord start = *s.record({0, 0});
  s.take({0, 0});
  EXPECT_THROW(promissory_terminated(start, s), UsageError);
}

TEST(PromissoryTermination, ContinuationBound) {
  const SearchState s = fanned_out_state();
  // (1 + 0) * 11 <= (1 + 1) * 9, but not with Lambda = 0.2.
  EXPECT_TRUE(continuation_within_bound(*s.record({6, 0}), s, AlphaParams(0, 1, Perimeter::g_aggressive)));
  EXPECT_FALSE(continuation_within_bound(*s.record({6, 0}), s,
                                         AlphaParams(0, Rational(1, 5), Perimeter::g_aggressive)));
}

TEST(SelectBranch, DrawThresholds) {
  EXPECT_EQ(branch_for_draw(0.5, 0.8), Branch::non_aggressive);
  EXPECT_EQ(branch_for_draw(0.5, 0.2), Branch::aggressive);
  EXPECT_EQ(branch_for_draw(0.3, 0.69), Branch::aggressive);
  EXPECT_EQ(branch_for_draw(0.3, 0.7), Branch::non_aggressive);
  EXPECT_EQ(branch_for_draw(0.9, 0.0), Branch::aggressive);
}

TEST(SelectBranch, CalibrationAtDelta03) {
  const PacParams params(1.0, 0.3, 0, 1);
  SplitMix64 rng(2718);
  const int n = 100000;
  int aggressive = 0;
  for (int i = 0; i < n; ++i)
    if (select_branch(params, rng).branch == Branch::aggressive) ++aggressive;
  const double freq = static_cast<double>(aggressive) / n;
  EXPECT_NEAR(freq, 0.7, 0.005);
  EXPECT_NEAR(freq, 0.7, 3.0 * std::sqrt(0.3 * 0.7 / n));
}

TEST(DeaGate, NoDecisionWhenNextIsOptimalLooking) {
  SearchState s = fanned_out_state();
  DeaGate gate(PacParams(1.0, 0.5, 0, 1), 1);
  EXPECT_EQ(gate.choose(s), (Cell{5, 1}));
  EXPECT_TRUE(gate.decisions().empty());
  EXPECT_EQ(gate.active().perimeter(), Perimeter::g_aggressive);
}

TEST(DeaGate, LogsTerminationsWithDraws) {
  // Expanding east to g = 2 before (5,1) gives (5,1)'s successors the outside
  // weight: (5,2) has f = 9 but f_alpha = 18, so the f = 11 front is terminated.
  SearchState s(11, 10, {5, 9}, Heuristic::manhattan);
  const AlphaParams p(0, 1, Perimeter::g_aggressive);
  s.insert_start({5, 0}, p);
  for (const Cell c : {Cell{5, 0}, Cell{6, 0}, Cell{7, 0}, Cell{5, 1}}) {
    s.take(c);
    s.expand(c, p, kAllFree);
  }
  ASSERT_FALSE(s.record({5, 2})->alpha_true);
  EXPECT_EQ(s.open_min_f(), 9);
  const NodeRecord& front = s.best_by_priority();
  ASSERT_GT(front.f, s.open_min_f());

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DeaGate gate(PacParams(1.0, 0.5, 0, 1), seed);
    const Cell chosen = gate.choose(s);
    ASSERT_EQ(gate.decisions().size(), 1u);
    const PerimeterDecision& d = gate.decisions().front();
    EXPECT_EQ(d.event_index, 0u);
    EXPECT_EQ(d.f_next, front.f);
    EXPECT_EQ(d.open_min_f, s.open_min_f());
    SplitMix64 replay(seed);
    EXPECT_EQ(d.rng_draw, replay.uniform());
    if (d.branch == Branch::aggressive) {
      EXPECT_EQ(chosen, front.cell);
      EXPECT_EQ(gate.active().perimeter(), Perimeter::g_aggressive);
    } else {
      EXPECT_EQ(chosen, s.best_by_f().cell);
      EXPECT_EQ(gate.active().perimeter(), Perimeter::g_nonaggressive);
    }
  }
}

TEST(DeaStar, EmptyMapHasNoTerminations) {
  const GridMap map = GridMap::empty(12, 9, {0, 0}, {11, 8});
  for (double delta : {0.1, 0.5, 0.9}) {
    for (double epsilon : {0.0, 1.0}) {
      const RealtimeOutcome out = dea_star(map, Heuristic::manhattan, PacParams(epsilon, delta, 0, 1),
                                           SensingMode::within(2), 99);
      EXPECT_TRUE(out.decisions.empty());
      EXPECT_EQ(traveled_cost(out.trace), 19);
      EXPECT_FALSE(exceedance_indicator(out.trace, 19, epsilon));
    }
  }
}

TEST(DeaStar, PinnedSeed42Trace) {
  const GridMap map = seed42_map();
  const RealtimeOutcome out = dea_star(map, Heuristic::manhattan, PacParams(1.0, 0.5, 0, 1), SensingMode::within(2), 7);
  EXPECT_EQ(trace_to_json(out.trace) + "\n", support::read_text(support::golden_path("dea_s42_d0.5_seed7.trace.json")));
  std::ostringstream log;
  write_decisions_jsonl(log, out.decisions);
  EXPECT_EQ(log.str(), support::read_text(support::golden_path("dea_s42_d0.5_seed7.decisions.jsonl")));
  EXPECT_TRUE(validate_trace(map, out.trace, *dijkstra_cost(map).cost).ok());
  EXPECT_EQ(out.aggressive_count + out.non_aggressive_count, out.decisions.size());
}

TEST(DeaStar, DifferentSeedsGiveDifferentLogs) {
  const GridMap map = seed42_map();
  const Cost c_star = *dijkstra_cost(map).cost;
  const PacParams params(1.0, 0.5, 0, 1);
  const RealtimeOutcome a = dea_star(map, Heuristic::manhattan, params, SensingMode::within(2), 7);
  const RealtimeOutcome b = dea_star(map, Heuristic::manhattan, params, SensingMode::within(2), 8);
  std::ostringstream la, lb;
  write_decisions_jsonl(la, a.decisions);
  write_decisions_jsonl(lb, b.decisions);
  EXPECT_NE(la.str(), lb.str());
  EXPECT_TRUE(validate_trace(map, a.trace, c_star).ok());
  EXPECT_TRUE(validate_trace(map, b.trace, c_star).ok());
}

TEST(DeaStar, DecisionLogFormat) {
  std::vector<PerimeterDecision> log{{0, 12, 10, 0.25, Branch::aggressive}, {1, 14, 12, 0.75, Branch::non_aggressive}};
  std::ostringstream out;
  write_decisions_jsonl(out, log);
  EXPECT_EQ(out.str(),
            "{\"event_index\":0,\"f_next\":12,\"open_min_f\":10,\"rng_draw\":0.25,\"branch\":\"aggressive\"}\n"
            "{\"event_index\":1,\"f_next\":14,\"open_min_f\":12,\"rng_draw\":0.75,\"branch\":\"non_aggressive\"}\n");
}

TEST(DeaStar, ExtremeDeltasFollowTheirBranch) {
  // delta near 0 keeps the aggressive perimeter almost always, near 1 almost never.
  const auto maps = support::field_corpus(10);
  std::size_t low_aggr = 0, low_total = 0, high_aggr = 0, high_total = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto lo = dea_star(maps[i], Heuristic::manhattan, PacParams(1.0, 0.01, 0, 1), SensingMode::within(2), i);
    const auto hi = dea_star(maps[i], Heuristic::manhattan, PacParams(1.0, 0.99, 0, 1), SensingMode::within(2), i);
    low_aggr += lo.aggressive_count;
    low_total += lo.decisions.size();
    high_aggr += hi.aggressive_count;
    high_total += hi.decisions.size();
  }
  ASSERT_GT(low_total, 0u);
  ASSERT_GT(high_total, 0u);
  EXPECT_GT(static_cast<double>(low_aggr) / static_cast<double>(low_total), 0.9);
  EXPECT_LT(static_cast<double>(high_aggr) / static_cast<double>(high_total), 0.1);
}
