#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deastar/grid.hpp"

namespace deastar {

/// Ground truth for one (from, to) query on a fully known map.
struct OracleResult {
  std::optional<Cost> cost;      // C*, absent when unreachable
  std::vector<Cell> witness;     // one optimal path, from..to inclusive; empty when unreachable

  bool reachable() const noexcept { return cost.has_value(); }
};

/// Exact shortest path by Dijkstra. The witness is deterministic: parents are
/// only replaced on strict improvement and neighbors are scanned N, E, S, W.
/// Throws UsageError if either endpoint is out of bounds or blocked.
OracleResult dijkstra_cost(const GridMap& map, Cell from, Cell to);

/// Convenience for the map's own start/goal.
inline OracleResult dijkstra_cost(const GridMap& map) { return dijkstra_cost(map, map.start(), map.goal()); }

bool solvable(const GridMap& map);

inline constexpr std::size_t kMaxEnumerationCells = 20;

/// Brute-force minimum over all simple paths (exhaustive DFS). Independent of
/// dijkstra_cost; used to cross-check it. The map may have at most `max_cells`
/// free cells and `max_cells` itself may not exceed kMaxEnumerationCells;
/// either violation throws UsageError.
std::optional<Cost> enumerate_paths(const GridMap& map, Cell from, Cell to,
                                    std::size_t max_cells = kMaxEnumerationCells);

inline constexpr std::size_t kMaxPathCountCells = 64;

/// Number of distinct simple paths between two cells. Guarded on free-cell
/// count like enumerate_paths, with a larger ceiling meant for sparse mazes.
std::size_t count_simple_paths(const GridMap& map, Cell from, Cell to, std::size_t max_cells = kMaxPathCountCells);

/// True when `path` starts at from, ends at to, stays on free cells and only
/// takes 4-adjacent steps.
bool is_valid_path(const GridMap& map, const std::vector<Cell>& path, Cell from, Cell to);

}  // namespace deastar
