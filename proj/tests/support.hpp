#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deastar/grid.hpp"
#include "deastar/realtime.hpp"
#include "deastar/rng.hpp"
#include "json.hpp"

namespace deastar::support {

std::string golden_path(const std::string& name);
std::string read_text(const std::string& path);
const nlohmann::json& reference_values();

inline constexpr const char* kDeadEndMap = "S...#\n.####\n....G\n";

/// Seeds shared by the property suites and the acceptance binary.
inline constexpr std::uint64_t kCorpusSeed = 0x5eed2024;

/// Solvable 20x20 obstacle fields at density 0.25, map i from corpus_seed(kCorpusSeed, i).
std::vector<GridMap> field_corpus(std::size_t count, int size = 20, double density = 0.25);

/// Random small map with start and goal drawn uniformly among distinct cells;
/// other cells blocked with probability p. May be unsolvable.
GridMap random_small_map(SplitMix64& rng, int width, int height, double p);

/// Hand-written edge cases for oracle cross-checks (at most 20 free cells each).
std::vector<GridMap> hand_written_maps();

struct TracePair {
  Trace bounded;
  Trace unbounded;
};

/// Bounded/unbounded pairs with sigma_b <= sigma_u pointwise and mu_b <= mu_u,
/// built from real engine traces: the bounded trace walks a prefix of the
/// unbounded one and considers a subset of its cells with identical f.
std::vector<TracePair> ordered_trace_pairs(std::size_t count, std::uint64_t seed);

}  // namespace deastar::support
