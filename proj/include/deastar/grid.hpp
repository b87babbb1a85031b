#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace deastar {

/// Path costs. Grids are unit-cost, so every cost in the library is an exact integer.
using Cost = std::int64_t;

/// Grid coordinate; x grows east, y grows south. North is y - 1.
struct Cell {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell c);

constexpr int manhattan_distance(Cell a, Cell b) noexcept {
  const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy;
}

constexpr bool adjacent(Cell a, Cell b) noexcept { return manhattan_distance(a, b) == 1; }

/// Bounded 4-connected unit-cost world. Immutable after construction.
///
/// Invariants (checked by the constructor): width, height >= 1; start and goal
/// are distinct, in bounds and unblocked. Solvability is not an invariant of
/// the type itself (parsed maps may be unsolvable); the generators guarantee it.
class GridMap {
 public:
  GridMap(int width, int height, std::vector<std::uint8_t> blocked, Cell start, Cell goal);

  /// All-free map.
  static GridMap empty(int width, int height, Cell start, Cell goal);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  Cell start() const noexcept { return start_; }
  Cell goal() const noexcept { return goal_; }
  std::size_t cell_count() const noexcept { return blocked_.size(); }

  bool in_bounds(Cell c) const noexcept { return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_; }
  bool blocked(Cell c) const;
  bool free(Cell c) const { return !blocked(c); }
  std::size_t free_count() const noexcept;

  std::size_t index(Cell c) const noexcept {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(c.x);
  }
  Cell cell_at(std::size_t index) const noexcept {
    return Cell{static_cast<int>(index % static_cast<std::size_t>(width_)),
                static_cast<int>(index / static_cast<std::size_t>(width_))};
  }

  const std::vector<std::uint8_t>& blocked_mask() const noexcept { return blocked_; }

  friend bool operator==(const GridMap&, const GridMap&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> blocked_;  // row-major, 1 = blocked
  Cell start_;
  Cell goal_;
};

/// Neighbor offsets in the fixed expansion order: north, east, south, west.
inline constexpr Cell kDirections[4] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};

/// Unblocked 4-neighbors of `cell` in N, E, S, W order. Throws UsageError when
/// `cell` is out of bounds.
std::vector<Cell> neighbors(const GridMap& map, Cell cell);

enum class Heuristic { manhattan, zero };

/// Admissible and consistent on 4-connected unit grids for both kinds.
constexpr Cost heuristic_value(Heuristic h, Cell cell, Cell goal) noexcept {
  return h == Heuristic::manhattan ? manhattan_distance(cell, goal) : 0;
}

std::string to_string(Heuristic h);
Heuristic parse_heuristic(const std::string& name);

}  // namespace deastar
