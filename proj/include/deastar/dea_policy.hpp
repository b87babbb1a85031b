#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "deastar/dea_gate.hpp"
#include "deastar/realtime.hpp"

namespace deastar {

/// delta-epsilon-alpha*: the real-time engine driven by an AlphA* planner
/// whose perimeter is re-drawn at every terminated promissory path. With
/// probability 1 - delta the aggressive perimeter is kept and the promissory
/// successor expanded; otherwise the planner switches to the non-aggressive
/// perimeter and backtracks to the minimum-f OPEN node.
///
/// Deterministic in (map, h, params, sensing, seed).
RealtimeOutcome dea_star(const GridMap& map, Heuristic h, const PacParams& params, const SensingMode& sensing,
                         std::uint64_t seed, const RealtimeOptions& options = {});

/// True iff traveled_cost > (1 + epsilon) * c_star, compared exactly. A trace
/// that never reached the goal counts as an exceedance.
/// Throws UsageError unless c_star > 0 and epsilon >= 0.
bool exceedance_indicator(const Trace& trace, Cost c_star, double epsilon);

/// {"event_index":..,"f_next":..,"open_min_f":..,"rng_draw":..,"branch":".."} per line.
void write_decisions_jsonl(std::ostream& out, const std::vector<PerimeterDecision>& decisions);

}  // namespace deastar
