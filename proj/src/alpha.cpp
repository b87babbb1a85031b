#include "deastar/alpha.hpp"

#include "deastar/errors.hpp"
#include "deastar/search_state.hpp"

namespace deastar {

std::string to_string(Perimeter p) {
  switch (p) {
    case Perimeter::g_nonaggressive: return "g_nonaggressive";
    case Perimeter::h_nonaggressive: return "h_nonaggressive";
    case Perimeter::g_aggressive: return "g_aggressive";
    case Perimeter::h_aggressive: return "h_aggressive";
  }
  return "?";
}

Perimeter parse_perimeter(const std::string& name) {
  if (name == "g_nonaggressive") return Perimeter::g_nonaggressive;
  if (name == "h_nonaggressive") return Perimeter::h_nonaggressive;
  if (name == "g_aggressive") return Perimeter::g_aggressive;
  if (name == "h_aggressive") return Perimeter::h_aggressive;
  throw UsageError("unknown perimeter '" + name + "'");
}

namespace {

void validate_weights(const Rational& inside, const Rational& outside) {
  if (!(inside > Rational(-1)))
    throw UsageError("lambda must exceed -1, got " + inside.to_string());
  if (inside > outside)
    throw UsageError("lambda (" + inside.to_string() + ") must not exceed Lambda (" + outside.to_string() + ")");
}

}  // namespace

AlphaParams::AlphaParams(Rational inside_weight, Rational outside_weight, Perimeter perimeter)
    : inside_(inside_weight), outside_(outside_weight), perimeter_(perimeter) {
  validate_weights(inside_, outside_);
}

bool alpha_predicate(const AlphaParams& params, const NodeRecord& candidate, const SearchState& state) {
  if (!candidate.parent || state.closed_count() == 0) return true;
  const NodeRecord* parent = state.record(*candidate.parent);
  if (parent == nullptr) throw UsageError("candidate parent " + to_string(*candidate.parent) + " has no record");

  switch (params.perimeter()) {
    case Perimeter::g_nonaggressive: return parent->g >= state.record(*state.last_expanded())->g;
    case Perimeter::h_nonaggressive: return parent->h <= state.record(*state.last_expanded())->h;
    case Perimeter::g_aggressive: return parent->g >= state.max_closed_g();
    case Perimeter::h_aggressive: return parent->h <= state.min_closed_h();
  }
  return true;
}

Rational suboptimality_factor(const AlphaParams& params) {
  return (Rational(1) + params.outside_weight()) / (Rational(1) + params.inside_weight());
}

Rational epsilon_bound(const AlphaParams& params) { return suboptimality_factor(params) - Rational(1); }

Rational epsilon_bound(const Rational& inside_weight, const Rational& outside_weight) {
  validate_weights(inside_weight, outside_weight);
  return (Rational(1) + outside_weight) / (Rational(1) + inside_weight) - Rational(1);
}

}  // namespace deastar
