#include "deastar/grid.hpp"

#include <algorithm>

#include "deastar/errors.hpp"

namespace deastar {

std::string to_string(Cell c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

GridMap::GridMap(int width, int height, std::vector<std::uint8_t> blocked, Cell start, Cell goal)
    : width_(width), height_(height), blocked_(std::move(blocked)), start_(start), goal_(goal) {
  if (width < 1 || height < 1) throw UsageError("map dimensions must be positive");
  if (blocked_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw UsageError("blocked mask size does not match map dimensions");
  if (!in_bounds(start)) throw UsageError("start " + to_string(start) + " is out of bounds");
  if (!in_bounds(goal)) throw UsageError("goal " + to_string(goal) + " is out of bounds");
  if (start == goal) throw UsageError("start and goal must differ");
  if (blocked_[index(start)]) throw UsageError("start cell is blocked");
  if (blocked_[index(goal)]) throw UsageError("goal cell is blocked");
  for (auto& b : blocked_) b = b ? 1 : 0;
}

GridMap GridMap::empty(int width, int height, Cell start, Cell goal) {
  if (width < 1 || height < 1) throw UsageError("map dimensions must be positive");
  return GridMap(width, height,
                 std::vector<std::uint8_t>(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0),
                 start, goal);
}

bool GridMap::blocked(Cell c) const {
  if (!in_bounds(c)) throw UsageError("cell " + to_string(c) + " is out of bounds");
  return blocked_[index(c)] != 0;
}

std::size_t GridMap::free_count() const noexcept {
  return static_cast<std::size_t>(std::count(blocked_.begin(), blocked_.end(), std::uint8_t{0}));
}

std::vector<Cell> neighbors(const GridMap& map, Cell cell) {
  if (!map.in_bounds(cell)) throw UsageError("cell " + to_string(cell) + " is out of bounds");
  std::vector<Cell> out;
  out.reserve(4);
  for (const Cell d : kDirections) {
    const Cell n{cell.x + d.x, cell.y + d.y};
    if (map.in_bounds(n) && !map.blocked(n)) out.push_back(n);
  }
  return out;
}

std::string to_string(Heuristic h) { return h == Heuristic::manhattan ? "manhattan" : "zero"; }

Heuristic parse_heuristic(const std::string& name) {
  if (name == "manhattan") return Heuristic::manhattan;
  if (name == "zero") return Heuristic::zero;
  throw UsageError("unknown heuristic '" + name + "'");
}

}  // namespace deastar
