#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "deastar/alpha.hpp"
#include "deastar/grid.hpp"
#include "deastar/indexed_heap.hpp"
#include "deastar/rational.hpp"

namespace deastar {

/// Per-node bookkeeping. f == g + h and f_alpha == (1 + weight) * f always.
struct NodeRecord {
  Cell cell;
  Cost g = 0;
  Cost h = 0;
  Cost f = 0;
  std::optional<Cell> parent;  // absent for the start node
  bool alpha_true = true;
  Rational weight;
  Rational f_alpha;
  std::uint64_t seq = 0;  // insertion index, refreshed on re-key
};

/// OPEN order: f_alpha, then lower h, then FIFO.
struct PriorityKey {
  Rational f_alpha;
  Cost h = 0;
  std::uint64_t seq = 0;
  friend std::strong_ordering operator<=>(const PriorityKey&, const PriorityKey&) = default;
};

/// Order used to find the OPEN node with minimum f (same tie-breaks).
struct FKey {
  Cost f = 0;
  Cost h = 0;
  std::uint64_t seq = 0;
  friend std::strong_ordering operator<=>(const FKey&, const FKey&) = default;
};

/// Cell walkability as seen by the planner (true map, or a believed map).
using Passable = std::function<bool(Cell)>;

/// OPEN / CLOSED sets of one best-first search over a grid.
///
/// Weights are frozen when a node is inserted or re-keyed. CLOSED nodes are
/// reopened on a cheaper path only when `reopen_closed` is set. The CLOSED
/// aggregates (max g, min h, most recently expanded) are maintained
/// incrementally over every expansion made so far, so a reopened node keeps
/// contributing its earlier values.
class SearchState {
 public:
  enum class Status : std::uint8_t { unseen, open, taken, closed, invalidated };

  SearchState(int width, int height, Cell goal, Heuristic heuristic, bool reopen_closed = false);

  /// Seeds OPEN with the start node (g = 0, inside the perimeter).
  void insert_start(Cell start, const AlphaParams& params);

  bool open_empty() const noexcept { return by_priority_.empty(); }
  std::size_t open_size() const noexcept { return by_priority_.size(); }

  /// Front of OPEN by (f_alpha, h, seq).
  const NodeRecord& best_by_priority() const;
  /// Front of OPEN by (f, h, seq).
  const NodeRecord& best_by_f() const;
  Cost open_min_f() const { return best_by_f().f; }

  /// Removes `cell` from OPEN so it can be expanded (or reached as the goal).
  void take(Cell cell);

  /// Generates successors of `cell` (which must have been taken from OPEN)
  /// through `passable`, inserting new nodes and re-keying cheaper paths to
  /// OPEN nodes (and CLOSED ones when reopening), then moves `cell` to CLOSED. Successor weights are evaluated
  /// with `params` before `cell` joins CLOSED.
  void expand(Cell cell, const AlphaParams& params, const Passable& passable);

  /// Drops an OPEN node that turned out to be blocked.
  void invalidate(Cell cell);

  Status status(Cell cell) const { return status_[index(cell)]; }
  bool in_open(Cell cell) const { return status(cell) == Status::open; }
  bool in_closed(Cell cell) const { return status(cell) == Status::closed; }

  /// Record for any cell ever inserted; nullptr for unseen cells.
  const NodeRecord* record(Cell cell) const;

  std::optional<Cell> last_expanded() const noexcept { return last_expanded_; }
  /// Number of expansions (a reopened node counts once per expansion).
  std::size_t closed_count() const noexcept { return closed_count_; }
  std::size_t reopened_count() const noexcept { return reopened_count_; }
  /// Meaningful only when closed_count() > 0.
  Cost max_closed_g() const noexcept { return max_closed_g_; }
  Cost min_closed_h() const noexcept { return min_closed_h_; }

  std::vector<Cell> open_cells() const;

  /// Cells in the order they first entered OPEN (each listed once).
  const std::vector<Cell>& considered() const noexcept { return considered_; }

  /// Start-to-cell path through parent links.
  std::vector<Cell> path_to(Cell cell) const;

  Cell goal() const noexcept { return goal_; }
  Heuristic heuristic() const noexcept { return heuristic_; }

 private:
  std::size_t index(Cell c) const noexcept {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(c.x);
  }
  void assign_priority(NodeRecord& rec, const AlphaParams& params);

  int width_;
  int height_;
  Cell goal_;
  Heuristic heuristic_;
  bool reopen_closed_;
  std::vector<NodeRecord> records_;
  std::vector<Status> status_;
  IndexedHeap<PriorityKey> by_priority_;
  IndexedHeap<FKey> by_f_;
  std::vector<Cell> considered_;
  std::optional<Cell> last_expanded_;
  std::size_t closed_count_ = 0;
  std::size_t reopened_count_ = 0;
  Cost max_closed_g_ = 0;
  Cost min_closed_h_ = 0;
  std::uint64_t next_seq_ = 0;
};

}  // namespace deastar
