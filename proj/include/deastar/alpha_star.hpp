#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "deastar/alpha.hpp"
#include "deastar/grid.hpp"
#include "deastar/search_state.hpp"

namespace deastar {

/// One selection from OPEN, in order. The final entry is the goal when a path
/// was found.
struct ExpansionRecord {
  Cell cell;
  Cost g = 0;
  Cost h = 0;
  Cost f = 0;
  Rational weight;
  Rational f_alpha;
  bool alpha_true = true;
};

struct SearchResult {
  std::optional<Cost> cost;  // C(t); absent when the goal is unreachable
  std::vector<Cell> path;    // start..goal inclusive
  std::size_t expansions = 0;
  std::size_t reopened = 0;  // CLOSED nodes moved back to OPEN
  std::vector<ExpansionRecord> trail;

  bool found() const noexcept { return cost.has_value(); }
};

/// Called just before each node leaves OPEN, with the state still holding it.
using SelectionObserver = std::function<void(const SearchState&, const NodeRecord& selected)>;

/// Offline AlphA*: best-first on the fully known map ordered by
/// (f_alpha, h, FIFO). With lambda = Lambda = 0 this is A*. CLOSED nodes are
/// reopened when a cheaper path reaches them, which the worst-case factor
/// (1 + Lambda) / (1 + lambda) relies on.
/// An unreachable goal is reported as !found(), not as an error.
SearchResult alpha_star(const GridMap& map, Heuristic h, const AlphaParams& params,
                        const SelectionObserver& observer = {});

/// Expansion audit trail as JSON lines:
/// {"cell":[x,y],"g":..,"h":..,"f":..,"w":..,"f_alpha":..,"alpha_true":..}
void write_trail_jsonl(std::ostream& out, const std::vector<ExpansionRecord>& trail);

}  // namespace deastar
