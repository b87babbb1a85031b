#include "deastar/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

#include "deastar/errors.hpp"

namespace deastar {

namespace {

void require_endpoint(const GridMap& map, Cell c, const char* role) {
  if (!map.in_bounds(c)) throw UsageError(std::string(role) + " " + to_string(c) + " is out of bounds");
  if (map.blocked(c)) throw UsageError(std::string(role) + " " + to_string(c) + " is blocked");
}

void require_small(const GridMap& map, std::size_t max_cells, std::size_t ceiling) {
  if (max_cells > ceiling) throw UsageError("max_cells may not exceed " + std::to_string(ceiling));
  if (map.free_count() > max_cells)
    throw UsageError("map has " + std::to_string(map.free_count()) + " free cells; enumeration limit is " +
                     std::to_string(max_cells));
}

}  // namespace

OracleResult dijkstra_cost(const GridMap& map, Cell from, Cell to) {
  require_endpoint(map, from, "source");
  require_endpoint(map, to, "target");

  constexpr Cost kInf = std::numeric_limits<Cost>::max();
  const std::size_t n = map.cell_count();
  std::vector<Cost> dist(n, kInf);
  std::vector<std::size_t> parent(n, n);
  std::vector<std::uint8_t> done(n, 0);

  // (distance, push sequence, cell index); the sequence makes pops deterministic.
  using Entry = std::tuple<Cost, std::uint64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::uint64_t seq = 0;

  const std::size_t src = map.index(from);
  const std::size_t dst = map.index(to);
  dist[src] = 0;
  heap.emplace(0, seq++, src);

  while (!heap.empty()) {
    const auto [d, s, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    if (u == dst) break;
    for (const Cell v : neighbors(map, map.cell_at(u))) {
      const std::size_t vi = map.index(v);
      if (done[vi]) continue;
      const Cost nd = d + 1;
      if (nd < dist[vi]) {
        dist[vi] = nd;
        parent[vi] = u;
        heap.emplace(nd, seq++, vi);
      }
    }
  }

  OracleResult result;
  if (dist[dst] == kInf) return result;
  result.cost = dist[dst];
  for (std::size_t at = dst; at != n; at = parent[at]) result.witness.push_back(map.cell_at(at));
  std::reverse(result.witness.begin(), result.witness.end());
  return result;
}

bool solvable(const GridMap& map) { return dijkstra_cost(map).reachable(); }

std::optional<Cost> enumerate_paths(const GridMap& map, Cell from, Cell to, std::size_t max_cells) {
  require_endpoint(map, from, "source");
  require_endpoint(map, to, "target");
  require_small(map, max_cells, kMaxEnumerationCells);

  std::vector<std::uint8_t> on_path(map.cell_count(), 0);
  std::optional<Cost> best;

  std::function<void(Cell, Cost)> dfs = [&](Cell at, Cost length) {
    if (at == to) {
      if (!best || length < *best) best = length;
      return;
    }
    on_path[map.index(at)] = 1;
    for (const Cell d : kDirections) {
      const Cell next{at.x + d.x, at.y + d.y};
      if (!map.in_bounds(next) || map.blocked(next) || on_path[map.index(next)]) continue;
      dfs(next, length + 1);
    }
    on_path[map.index(at)] = 0;
  };
  dfs(from, 0);
  return best;
}

std::size_t count_simple_paths(const GridMap& map, Cell from, Cell to, std::size_t max_cells) {
  require_endpoint(map, from, "source");
  require_endpoint(map, to, "target");
  require_small(map, max_cells, kMaxPathCountCells);

  std::vector<std::uint8_t> on_path(map.cell_count(), 0);
  std::size_t count = 0;
  std::function<void(Cell)> dfs = [&](Cell at) {
    if (at == to) {
      ++count;
      return;
    }
    on_path[map.index(at)] = 1;
    for (const Cell d : kDirections) {
      const Cell next{at.x + d.x, at.y + d.y};
      if (!map.in_bounds(next) || map.blocked(next) || on_path[map.index(next)]) continue;
      dfs(next);
    }
    on_path[map.index(at)] = 0;
  };
  dfs(from);
  return count;
}

bool is_valid_path(const GridMap& map, const std::vector<Cell>& path, Cell from, Cell to) {
  if (path.empty() || path.front() != from || path.back() != to) return false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!map.in_bounds(path[i]) || map.blocked(path[i])) return false;
    if (i > 0 && !adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

}  // namespace deastar
