#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deastar/alpha.hpp"
#include "deastar/rng.hpp"
#include "deastar/search_state.hpp"

namespace deastar {

/// Which perimeter pair the gate switches between. The g family uses
/// g_aggressive / g_nonaggressive, the h family the h variants.
enum class PerimeterFamily { g, h };

std::string to_string(PerimeterFamily family);
PerimeterFamily parse_perimeter_family(const std::string& name);

/// (epsilon, delta) bound plus the AlphA* weights the gate runs with.
/// Construction rejects delta outside the open interval (0, 1), negative
/// epsilon, and invalid weights.
class PacParams {
 public:
  PacParams(double epsilon, double delta, Rational inside_weight, Rational outside_weight,
            PerimeterFamily family = PerimeterFamily::g);

  double epsilon() const noexcept { return epsilon_; }
  double delta() const noexcept { return delta_; }
  PerimeterFamily family() const noexcept { return family_; }
  const Rational& inside_weight() const noexcept { return aggressive_.inside_weight(); }
  const Rational& outside_weight() const noexcept { return aggressive_.outside_weight(); }

  const AlphaParams& aggressive() const noexcept { return aggressive_; }
  const AlphaParams& non_aggressive() const noexcept { return non_aggressive_; }

  /// Set when epsilon is below (1 + Lambda) / (1 + lambda) - 1, i.e. below
  /// what AlphA* itself can guarantee offline.
  std::optional<std::string> warning() const;

 private:
  double epsilon_;
  double delta_;
  PerimeterFamily family_;
  AlphaParams aggressive_;
  AlphaParams non_aggressive_;
};

enum class Branch { aggressive, non_aggressive, admissible_continue };

std::string to_string(Branch b);

/// Outcome of one gate evaluation. rng_draw is meaningful only when a draw
/// was made (terminated promissory path).
struct PerimeterDecision {
  std::size_t event_index = 0;
  Cost f_next = 0;
  Cost open_min_f = 0;
  double rng_draw = 0.0;
  Branch branch = Branch::admissible_continue;
};

/// True iff f(next) > min f over OPEN: the node the current ordering would
/// expand next is no longer globally most promising. Equality does not
/// terminate. Throws UsageError when OPEN is empty.
bool promissory_terminated(const NodeRecord& next, const SearchState& state);

/// (1 + lambda) f(next) <= (1 + Lambda) min_OPEN f: continuing with `next`
/// still respects the AlphA* worst-case factor.
bool continuation_within_bound(const NodeRecord& next, const SearchState& state, const AlphaParams& params);

/// aggressive iff draw < 1 - delta; otherwise non_aggressive.
Branch branch_for_draw(double delta, double draw) noexcept;

struct BranchDraw {
  Branch branch;
  double draw;
};

/// Draws u uniform in [0, 1) from `rng` and applies branch_for_draw. Only
/// meaningful after promissory_terminated returned true.
BranchDraw select_branch(const PacParams& params, SplitMix64& rng);

/// The per-run delta gate. Owns the run's generator and the perimeter that
/// is currently in force; every terminated promissory path is logged.
class DeaGate {
 public:
  DeaGate(PacParams params, std::uint64_t seed);

  /// Picks the cell to expand next from a non-empty OPEN and updates the
  /// active perimeter. Aggressive continues with the priority front; the
  /// non-aggressive branch backtracks to the minimum-f node.
  Cell choose(const SearchState& state);

  /// Perimeter to use for successors generated by the next expansion.
  const AlphaParams& active() const noexcept { return aggressive_active_ ? params_.aggressive() : params_.non_aggressive(); }

  const PacParams& params() const noexcept { return params_; }
  const std::vector<PerimeterDecision>& decisions() const noexcept { return decisions_; }
  std::size_t aggressive_count() const noexcept { return aggressive_count_; }
  std::size_t non_aggressive_count() const noexcept { return decisions_.size() - aggressive_count_; }

 private:
  PacParams params_;
  SplitMix64 rng_;
  bool aggressive_active_ = true;
  std::vector<PerimeterDecision> decisions_;
  std::size_t aggressive_count_ = 0;
};

}  // namespace deastar
