#include "deastar/dea_gate.hpp"

#include <cmath>

#include "deastar/errors.hpp"

namespace deastar {

std::string to_string(PerimeterFamily family) { return family == PerimeterFamily::g ? "g" : "h"; }

PerimeterFamily parse_perimeter_family(const std::string& name) {
  if (name == "g") return PerimeterFamily::g;
  if (name == "h") return PerimeterFamily::h;
  throw UsageError("unknown perimeter family '" + name + "' (expected g or h)");
}

namespace {

Perimeter aggressive_of(PerimeterFamily f) { return f == PerimeterFamily::g ? Perimeter::g_aggressive : Perimeter::h_aggressive; }
Perimeter non_aggressive_of(PerimeterFamily f) {
  return f == PerimeterFamily::g ? Perimeter::g_nonaggressive : Perimeter::h_nonaggressive;
}

double checked_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie strictly between 0 and 1");
  return delta;
}

double checked_epsilon(double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw UsageError("epsilon must be a finite value >= 0");
  return epsilon;
}

}  // namespace

PacParams::PacParams(double epsilon, double delta, Rational inside_weight, Rational outside_weight,
                     PerimeterFamily family)
    : epsilon_(checked_epsilon(epsilon)),
      delta_(checked_delta(delta)),
      family_(family),
      aggressive_(inside_weight, outside_weight, aggressive_of(family)),
      non_aggressive_(inside_weight, outside_weight, non_aggressive_of(family)) {}

std::optional<std::string> PacParams::warning() const {
  const Rational floor = epsilon_bound(aggressive_);
  if (Rational::from_double(epsilon_) < floor)
    return "epsilon " + std::to_string(epsilon_) + " is below the AlphA* floor " + floor.to_string() +
           " for these weights; the bound cannot hold even offline";
  return std::nullopt;
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::aggressive: return "aggressive";
    case Branch::non_aggressive: return "non_aggressive";
    case Branch::admissible_continue: return "admissible_continue";
  }
  return "?";
}

bool promissory_terminated(const NodeRecord& next, const SearchState& state) {
  if (state.open_empty()) throw UsageError("promissory_terminated needs a non-empty OPEN");
  return next.f > state.open_min_f();
}

bool continuation_within_bound(const NodeRecord& next, const SearchState& state, const AlphaParams& params) {
  const Rational lhs = (Rational(1) + params.inside_weight()) * Rational(next.f);
  const Rational rhs = (Rational(1) + params.outside_weight()) * Rational(state.open_min_f());
  return lhs <= rhs;
}

Branch branch_for_draw(double delta, double draw) noexcept {
  return draw < 1.0 - delta ? Branch::aggressive : Branch::non_aggressive;
}

BranchDraw select_branch(const PacParams& params, SplitMix64& rng) {
  const double u = rng.uniform();
  return BranchDraw{branch_for_draw(params.delta(), u), u};
}

DeaGate::DeaGate(PacParams params, std::uint64_t seed) : params_(std::move(params)), rng_(seed) {}

Cell DeaGate::choose(const SearchState& state) {
  const NodeRecord& next = state.best_by_priority();
  if (!promissory_terminated(next, state)) return next.cell;

  const BranchDraw draw = select_branch(params_, rng_);
  PerimeterDecision d;
  d.event_index = decisions_.size();
  d.f_next = next.f;
  d.open_min_f = state.open_min_f();
  d.rng_draw = draw.draw;
  d.branch = draw.branch;
  decisions_.push_back(d);

  if (draw.branch == Branch::aggressive) {
    aggressive_active_ = true;
    ++aggressive_count_;
    return next.cell;
  }
  aggressive_active_ = false;
  return state.best_by_f().cell;
}

}  // namespace deastar
