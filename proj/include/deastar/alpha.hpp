#pragma once

#include <string>

#include "deastar/rational.hpp"

namespace deastar {

class SearchState;
struct NodeRecord;

/// The four alpha-perimeters. Non-aggressive variants compare a candidate's
/// parent against the most recently expanded node; aggressive variants
/// compare it against the extremum over all of CLOSED.
enum class Perimeter { g_nonaggressive, h_nonaggressive, g_aggressive, h_aggressive };

std::string to_string(Perimeter p);
Perimeter parse_perimeter(const std::string& name);

constexpr bool is_aggressive(Perimeter p) noexcept {
  return p == Perimeter::g_aggressive || p == Perimeter::h_aggressive;
}

/// Weights for the priority (1 + w) * f. A node inside the perimeter gets
/// `inside_weight` (lambda), every other node gets `outside_weight` (Lambda).
/// Construction enforces -1 < lambda <= Lambda.
class AlphaParams {
 public:
  AlphaParams(Rational inside_weight, Rational outside_weight, Perimeter perimeter);

  /// Plain A*: both weights zero, so the priority order is the f order.
  static AlphaParams astar() { return AlphaParams(0, 0, Perimeter::g_nonaggressive); }

  const Rational& inside_weight() const noexcept { return inside_; }
  const Rational& outside_weight() const noexcept { return outside_; }
  Perimeter perimeter() const noexcept { return perimeter_; }

  AlphaParams with_perimeter(Perimeter p) const { return AlphaParams(inside_, outside_, p); }

  friend bool operator==(const AlphaParams&, const AlphaParams&) = default;

 private:
  Rational inside_;
  Rational outside_;
  Perimeter perimeter_;
};

/// alpha(n) for `candidate` against the current search state. The state must
/// not yet contain the candidate's parent in CLOSED: successors are judged
/// while their parent is being expanded, so "most recently expanded" refers to
/// the expansion before it. Vacuously true when CLOSED is empty or the
/// candidate has no parent.
bool alpha_predicate(const AlphaParams& params, const NodeRecord& candidate, const SearchState& state);

/// lambda when the perimeter predicate holds, Lambda otherwise.
inline const Rational& weight(bool alpha_true, const AlphaParams& params) noexcept {
  return alpha_true ? params.inside_weight() : params.outside_weight();
}

/// Smallest epsilon for which AlphA* is guaranteed epsilon-admissible:
/// (1 + Lambda) / (1 + lambda) - 1.
Rational epsilon_bound(const AlphaParams& params);

/// Same, validating raw weights first (UsageError unless -1 < lambda <= Lambda).
Rational epsilon_bound(const Rational& inside_weight, const Rational& outside_weight);

/// (1 + Lambda) / (1 + lambda): the guaranteed worst-case cost ratio.
Rational suboptimality_factor(const AlphaParams& params);

}  // namespace deastar
