#include "deastar/realtime.hpp"

#include <algorithm>
#include <unordered_map>

#include "deastar/errors.hpp"
#include "deastar/search_state.hpp"
#include "json.hpp"

namespace deastar {

SensingMode SensingMode::within(int r) {
  if (r < 1) throw UsageError("sensing radius must be >= 1");
  return SensingMode{Kind::radius, r};
}

std::string to_string(const SensingMode& mode) {
  return mode.kind == SensingMode::Kind::omniscient ? "omniscient" : "radius" + std::to_string(mode.radius);
}

std::int64_t Trace::sum_sigma() const noexcept {
  std::int64_t total = 0;
  for (const auto& [cell, count] : visit_count) total += count;
  return total;
}

std::int64_t Trace::sigma(Cell c) const {
  const auto it = visit_count.find(c);
  return it == visit_count.end() ? 0 : it->second;
}

namespace {

/// The planner's knowledge of the map under a sensing mode.
class Belief {
 public:
  Belief(const GridMap& map, const SensingMode& mode)
      : map_(map), mode_(mode), known_(mode.kind == SensingMode::Kind::omniscient ? 0 : map.cell_count(), 0) {}

  bool passable(Cell c) const {
    if (mode_.kind == SensingMode::Kind::omniscient) return !map_.blocked(c);
    return !known_[map_.index(c)] || !map_.blocked(c);
  }

  /// Marks everything within the radius of `at` as observed; returns cells
  /// that became known to be blocked.
  std::vector<Cell> sense(Cell at) {
    std::vector<Cell> revealed;
    if (mode_.kind == SensingMode::Kind::omniscient) return revealed;
    const int r = mode_.radius;
    for (int y = std::max(0, at.y - r); y <= std::min(map_.height() - 1, at.y + r); ++y) {
      for (int x = std::max(0, at.x - r); x <= std::min(map_.width() - 1, at.x + r); ++x) {
        const Cell c{x, y};
        auto& k = known_[map_.index(c)];
        if (k) continue;
        k = 1;
        if (map_.blocked(c)) revealed.push_back(c);
      }
    }
    return revealed;
  }

 private:
  const GridMap& map_;
  SensingMode mode_;
  std::vector<std::uint8_t> known_;
};

Cell parent_of(const SearchState& state, Cell c) {
  const NodeRecord* rec = state.record(c);
  if (rec == nullptr || !rec->parent) throw std::logic_error("search tree walk left the tree at " + to_string(c));
  return *rec->parent;
}

/// Cells the agent enters going from `from` to `to` through the search tree:
/// up to the deepest common ancestor, then down. Excludes `from`. Tree depth
/// equals g on a unit-cost grid.
std::vector<Cell> tree_route(const SearchState& state, Cell from, Cell to) {
  std::vector<Cell> up;
  std::vector<Cell> down;
  Cell a = from;
  Cell b = to;
  Cost ga = state.record(a)->g;
  Cost gb = state.record(b)->g;
  while (ga > gb) {
    a = parent_of(state, a);
    up.push_back(a);
    --ga;
  }
  while (gb > ga) {
    down.push_back(b);
    b = parent_of(state, b);
    --gb;
  }
  while (a != b) {
    a = parent_of(state, a);
    up.push_back(a);
    down.push_back(b);
    b = parent_of(state, b);
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace

RealtimeOutcome execute_realtime(const GridMap& map, Heuristic h, const Policy& policy, const SensingMode& sensing,
                                 std::uint64_t seed, const RealtimeOptions& options) {
  if (sensing.kind == SensingMode::Kind::radius && sensing.radius < 1) throw UsageError("sensing radius must be >= 1");

  Belief belief(map, sensing);
  SearchState state(map.width(), map.height(), map.goal(), h);
  const Passable passable = [&belief](Cell c) { return belief.passable(c); };

  std::optional<DeaGate> gate;
  std::optional<AlphaParams> fixed;
  if (std::holds_alternative<AStarReplan>(policy))
    fixed = AlphaParams::astar();
  else if (const auto* a = std::get_if<AlphaStarPolicy>(&policy))
    fixed = a->params;
  else
    gate.emplace(std::get<DeaStarPolicy>(policy).params, seed);

  RealtimeOutcome outcome;
  Trace& trace = outcome.trace;
  trace.start = map.start();
  trace.seed = seed;
  trace.visit_count[map.start()] = 1;

  std::size_t synced = 0;
  auto sync_considered = [&] {
    const auto& cells = state.considered();
    for (; synced < cells.size(); ++synced) {
      const NodeRecord* rec = state.record(cells[synced]);
      trace.considered.push_back(Consideration{rec->cell, rec->f, rec->g});
    }
  };

  belief.sense(map.start());
  state.insert_start(map.start(), fixed ? *fixed : gate->active());
  sync_considered();

  Cell agent = map.start();
  while (!state.open_empty()) {
    const Cell target = gate ? gate->choose(state) : state.best_by_priority().cell;
    const AlphaParams& params = gate ? gate->active() : *fixed;

    state.take(target);
    if (target != map.goal()) {
      state.expand(target, params, passable);
      sync_considered();
    }

    if (target != agent) {
      for (const Cell step : tree_route(state, agent, target)) {
        if (map.blocked(step)) throw std::logic_error("agent routed into blocked cell " + to_string(step));
        trace.moves.push_back(step);
        ++trace.visit_count[step];
        for (const Cell c : belief.sense(step)) state.invalidate(c);
        if (trace.moves.size() > options.step_budget) {
          if (gate) outcome.decisions = gate->decisions();
          throw RunawayError("step budget of " + std::to_string(options.step_budget) + " moves exceeded",
                             std::move(trace));
        }
      }
      agent = target;
    }

    if (target == map.goal()) {
      trace.reached_goal = true;
      break;
    }
  }

  if (gate) {
    outcome.decisions = gate->decisions();
    outcome.aggressive_count = gate->aggressive_count();
    outcome.non_aggressive_count = gate->non_aggressive_count();
  }
  return outcome;
}

Cost literal_cost(const Trace& trace) {
  Cost total = 0;
  for (const auto& c : trace.considered) total += trace.sigma(c.cell) * c.f;
  return total;
}

Cost literal_cost_g(const Trace& trace) {
  Cost total = 0;
  for (const auto& c : trace.considered) total += trace.sigma(c.cell) * c.g;
  return total;
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::dominates: return "dominates";
    case Dominance::not_dominated: return "not_dominated";
    case Dominance::incomparable: return "incomparable";
  }
  return "?";
}

Dominance dominance_check(const Trace& bounded, const Trace& unbounded) {
  std::map<Cell, Cost> f_unbounded;
  for (const auto& c : unbounded.considered) f_unbounded.emplace(c.cell, c.f);

  bool pointwise = bounded.mu() <= unbounded.mu();
  for (const auto& c : bounded.considered) {
    const auto it = f_unbounded.find(c.cell);
    if (it == f_unbounded.end() || it->second != c.f) return Dominance::incomparable;
    if (bounded.sigma(c.cell) > unbounded.sigma(c.cell)) pointwise = false;
  }
  if (!pointwise) return Dominance::not_dominated;

  if (literal_cost(bounded) > literal_cost(unbounded))
    throw std::logic_error("dominance holds but literal_cost(bounded) > literal_cost(unbounded)");
  return Dominance::dominates;
}

TraceCheck validate_trace(const GridMap& map, const Trace& trace, std::optional<Cost> c_star) {
  TraceCheck check;
  Cell at = trace.start;
  std::map<Cell, std::int64_t> recount{{trace.start, 1}};
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Cell next = trace.moves[i];
    if (!map.in_bounds(next) || map.blocked(next) || !adjacent(at, next)) {
      if (check.adjacency) check.detail += "illegal move " + std::to_string(i) + " " + to_string(at) + "->" + to_string(next) + "; ";
      check.adjacency = false;
    }
    ++recount[next];
    at = next;
  }
  if (recount != trace.visit_count) {
    check.sigma_consistent = false;
    check.detail += "visit counts disagree with moves; ";
  }
  if (trace.reached_goal) {
    if (at != map.goal()) {
      check.adjacency = false;
      check.detail += "trace claims the goal but ends at " + to_string(at) + "; ";
    }
    if (c_star && traveled_cost(trace) < *c_star) {
      check.lower_bound = false;
      check.detail += "traveled " + std::to_string(traveled_cost(trace)) + " < C* " + std::to_string(*c_star) + "; ";
    }
  }
  return check;
}

std::string trace_to_json(const Trace& trace) {
  nlohmann::ordered_json j;
  auto moves = nlohmann::ordered_json::array();
  for (const Cell c : trace.moves) moves.push_back({c.x, c.y});
  j["moves"] = std::move(moves);
  auto sigma = nlohmann::ordered_json::object();
  for (const auto& [cell, count] : trace.visit_count) sigma[std::to_string(cell.x) + "," + std::to_string(cell.y)] = count;
  j["sigma"] = std::move(sigma);
  j["mu"] = trace.mu();
  j["literal_cost"] = literal_cost(trace);
  j["literal_cost_g"] = literal_cost_g(trace);
  j["traveled_cost"] = traveled_cost(trace);
  j["reached_goal"] = trace.reached_goal;
  j["seed"] = trace.seed;
  return j.dump();
}

}  // namespace deastar
