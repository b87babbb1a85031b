#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "deastar/alpha.hpp"
#include "deastar/dea_gate.hpp"
#include "deastar/grid.hpp"

namespace deastar {

/// What the planner knows about the map.
///
/// omniscient: the true map. radius: cells within Chebyshev distance `radius`
/// of any cell the agent has occupied are known; everything else is assumed
/// free until observed.
struct SensingMode {
  enum class Kind { omniscient, radius };
  Kind kind = Kind::omniscient;
  int radius = 0;

  static SensingMode omniscient() { return SensingMode{}; }
  /// Throws UsageError unless r >= 1.
  static SensingMode within(int r);

  friend bool operator==(const SensingMode&, const SensingMode&) = default;
};

std::string to_string(const SensingMode& mode);

/// A* with its frontier repaired as observations arrive.
struct AStarReplan {};
struct AlphaStarPolicy {
  AlphaParams params;
};
struct DeaStarPolicy {
  PacParams params;
};
using Policy = std::variant<AStarReplan, AlphaStarPolicy, DeaStarPolicy>;

/// A cell that entered the planner's attention, with its f (and g) at that moment.
struct Consideration {
  Cell cell;
  Cost f = 0;
  Cost g = 0;
};

/// Physical execution record of one real-time run.
struct Trace {
  Cell start;
  std::vector<Cell> moves;                  // cells entered, in order (start excluded)
  std::map<Cell, std::int64_t> visit_count;  // sigma(n): occurrences in moves, +1 for start
  std::vector<Consideration> considered;    // mu = considered.size(), each cell once
  bool reached_goal = false;
  std::uint64_t seed = 0;

  std::size_t mu() const noexcept { return considered.size(); }
  std::int64_t sum_sigma() const noexcept;
  std::int64_t sigma(Cell c) const;
};

struct RealtimeOptions {
  std::size_t step_budget = 1'000'000;
};

struct RealtimeOutcome {
  Trace trace;
  std::vector<PerimeterDecision> decisions;  // empty unless the policy is DeaStarPolicy
  std::size_t aggressive_count = 0;
  std::size_t non_aggressive_count = 0;
};

/// The step budget ran out. The partial trace is kept for diagnosis.
class RunawayError : public std::runtime_error {
 public:
  RunawayError(const std::string& what, Trace trace) : std::runtime_error(what), trace_(std::move(trace)) {}
  const Trace& trace() const noexcept { return trace_; }

 private:
  Trace trace_;
};

/// Runs a planner under the real-time contract. Each iteration the planner
/// picks the next OPEN node and expands it against what it currently
/// believes; the agent then walks the search tree to that node (up to the
/// deepest common ancestor and back down), sensing after every step.
/// Obstacles that come into view are removed from OPEN. The run stops when the
/// agent stands on the goal, or with reached_goal = false when OPEN empties.
/// Throws RunawayError past options.step_budget moves.
RealtimeOutcome execute_realtime(const GridMap& map, Heuristic h, const Policy& policy, const SensingMode& sensing,
                                 std::uint64_t seed, const RealtimeOptions& options = {});

/// sum over considered n of sigma(n) * f(n), f taken at first consideration;
/// considered-but-never-visited cells contribute zero.
Cost literal_cost(const Trace& trace);

/// The same sum with g in place of f.
Cost literal_cost_g(const Trace& trace);

/// Unit steps physically taken.
inline Cost traveled_cost(const Trace& trace) noexcept { return static_cast<Cost>(trace.moves.size()); }

enum class Dominance { dominates, not_dominated, incomparable };

std::string to_string(Dominance d);

/// Compares a bounded-backtracking trace against an unbounded one.
/// incomparable: the bounded consideration set is not contained in the
/// unbounded one, or a shared cell carries different f values.
/// dominates: mu_b <= mu_u and sigma_b(n) <= sigma_u(n) on every shared cell;
/// literal_cost(bounded) <= literal_cost(unbounded) then holds and is checked
/// (std::logic_error if not).
Dominance dominance_check(const Trace& bounded, const Trace& unbounded);

struct TraceCheck {
  bool adjacency = true;          // consecutive positions 4-adjacent, all on free cells
  bool sigma_consistent = true;   // visit_count recomputed from moves matches
  bool lower_bound = true;        // reached goal => traveled >= C*
  std::string detail;

  bool ok() const noexcept { return adjacency && sigma_consistent && lower_bound; }
};

/// Validates a trace produced on `map`. `c_star` is only consulted when the
/// trace reached the goal.
TraceCheck validate_trace(const GridMap& map, const Trace& trace, std::optional<Cost> c_star);

/// {"moves":[[x,y],..],"sigma":{"x,y":n,..},"mu":..,"literal_cost":..,
///  "literal_cost_g":..,"traveled_cost":..,"reached_goal":..,"seed":..}
std::string trace_to_json(const Trace& trace);

}  // namespace deastar
