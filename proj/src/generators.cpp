#include "deastar/generators.hpp"

#include <vector>

#include "deastar/errors.hpp"
#include "deastar/oracle.hpp"
#include "deastar/rng.hpp"

namespace deastar {

GeneratedMap generate_obstacle_field(int width, int height, double density, std::uint64_t seed) {
  if (width < 2 || height < 2) throw UsageError("obstacle field needs width and height >= 2");
  if (!(density >= 0.0 && density < 1.0)) throw UsageError("density must lie in [0, 1)");

  const Cell start{0, 0};
  const Cell goal{width - 1, height - 1};
  const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);

  for (int attempt = 0; attempt < kGenerationRetryBudget; ++attempt) {
    SplitMix64 rng(split_seed(seed, {static_cast<std::uint64_t>(attempt)}));
    std::vector<std::uint8_t> blocked(n, 0);
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const Cell c{x, y};
        if (c == start || c == goal) continue;
        blocked[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)] =
            rng.uniform() < density ? 1 : 0;
      }
    }
    GridMap map(width, height, std::move(blocked), start, goal);
    if (solvable(map)) return GeneratedMap{std::move(map), attempt};
  }
  throw GenerationError("no solvable " + std::to_string(width) + "x" + std::to_string(height) +
                        " obstacle field at density " + std::to_string(density) + " within " +
                        std::to_string(kGenerationRetryBudget) + " attempts");
}

GridMap generate_maze(int width, int height, std::uint64_t seed) {
  if (width < 5 || height < 5 || width % 2 == 0 || height % 2 == 0)
    throw UsageError("maze dimensions must be odd and >= 5, got " + std::to_string(width) + "x" +
                     std::to_string(height));

  const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> blocked(n, 1);
  std::vector<std::uint8_t> visited(n, 0);
  auto idx = [width](Cell c) {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(c.x);
  };

  SplitMix64 rng(seed);
  const Cell origin{1, 1};
  std::vector<Cell> stack{origin};
  blocked[idx(origin)] = 0;
  visited[idx(origin)] = 1;

  while (!stack.empty()) {
    const Cell cur = stack.back();
    Cell options[4];
    std::size_t count = 0;
    for (const Cell d : kDirections) {
      const Cell next{cur.x + 2 * d.x, cur.y + 2 * d.y};
      if (next.x < 1 || next.y < 1 || next.x > width - 2 || next.y > height - 2) continue;
      if (!visited[idx(next)]) options[count++] = next;
    }
    if (count == 0) {
      stack.pop_back();
      continue;
    }
    const Cell next = options[rng.below(count)];
    blocked[idx(Cell{(cur.x + next.x) / 2, (cur.y + next.y) / 2})] = 0;
    blocked[idx(next)] = 0;
    visited[idx(next)] = 1;
    stack.push_back(next);
  }

  return GridMap(width, height, std::move(blocked), origin, Cell{width - 2, height - 2});
}

}  // namespace deastar
