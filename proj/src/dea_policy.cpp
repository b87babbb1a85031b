#include "deastar/dea_policy.hpp"

#include <ostream>

#include "deastar/errors.hpp"
#include "json.hpp"

namespace deastar {

RealtimeOutcome dea_star(const GridMap& map, Heuristic h, const PacParams& params, const SensingMode& sensing,
                         std::uint64_t seed, const RealtimeOptions& options) {
  return execute_realtime(map, h, DeaStarPolicy{params}, sensing, seed, options);
}

bool exceedance_indicator(const Trace& trace, Cost c_star, double epsilon) {
  if (c_star <= 0) throw UsageError("c_star must be positive");
  if (!(epsilon >= 0.0)) throw UsageError("epsilon must be >= 0");
  if (!trace.reached_goal) return true;
  const Rational limit = (Rational(1) + Rational::from_double(epsilon)) * Rational(c_star);
  return Rational(traveled_cost(trace)) > limit;
}

void write_decisions_jsonl(std::ostream& out, const std::vector<PerimeterDecision>& decisions) {
  for (const auto& d : decisions) {
    nlohmann::ordered_json line;
    line["event_index"] = d.event_index;
    line["f_next"] = d.f_next;
    line["open_min_f"] = d.open_min_f;
    line["rng_draw"] = d.rng_draw;
    line["branch"] = to_string(d.branch);
    out << line.dump() << '\n';
  }
}

}  // namespace deastar
