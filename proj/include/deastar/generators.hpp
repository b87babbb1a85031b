#pragma once

#include <cstdint>

#include "deastar/grid.hpp"

namespace deastar {

/// Attempts allowed before a generator gives up with GenerationError.
inline constexpr int kGenerationRetryBudget = 1000;

struct GeneratedMap {
  GridMap map;
  int retries = 0;  // rejected (unsolvable) attempts before `map`
};

/// Random obstacle field. Start is the north-west corner, goal the south-east
/// corner. Every other cell, in row-major order, is blocked iff a uniform draw
/// is below `density`. Attempt k (k = 0, 1, ...) uses the stream
/// split_seed(seed, {k}); unsolvable attempts are rejected.
///
/// Requires width, height >= 2 and 0 <= density < 1 (UsageError otherwise).
/// Throws GenerationError when kGenerationRetryBudget attempts all fail.
GeneratedMap generate_obstacle_field(int width, int height, double density, std::uint64_t seed);

/// Perfect maze carved by a recursive backtracker over the odd-coordinate
/// lattice. Start is (1, 1), goal is (width - 2, height - 2). Width and height
/// must be odd and >= 5 (UsageError otherwise).
GridMap generate_maze(int width, int height, std::uint64_t seed);

}  // namespace deastar
