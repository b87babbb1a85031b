#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "deastar/generators.hpp"
#include "deastar/harness.hpp"
#include "deastar/map_io.hpp"

#ifndef DEASTAR_GOLDEN_DIR
#error "DEASTAR_GOLDEN_DIR must point at tests/golden"
#endif

namespace deastar::support {

std::string golden_path(const std::string& name) { return std::string(DEASTAR_GOLDEN_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const nlohmann::json& reference_values() {
  static const nlohmann::json values = nlohmann::json::parse(read_text(golden_path("reference_values.json")));
  return values;
}

std::vector<GridMap> field_corpus(std::size_t count, int size, double density) {
  std::vector<GridMap> maps;
  maps.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    maps.push_back(generate_obstacle_field(size, size, density, corpus_seed(kCorpusSeed, i)).map);
  return maps;
}

GridMap random_small_map(SplitMix64& rng, int width, int height, double p) {
  const auto n = static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
  const std::uint64_t s = rng.below(n);
  std::uint64_t g = rng.below(n - 1);
  if (g >= s) ++g;
  std::vector<std::uint8_t> blocked(n, 0);
  for (std::uint64_t i = 0; i < n; ++i)
    if (i != s && i != g && rng.uniform() < p) blocked[i] = 1;
  const auto cell = [width](std::uint64_t i) {
    return Cell{static_cast<int>(i % static_cast<std::uint64_t>(width)), static_cast<int>(i / static_cast<std::uint64_t>(width))};
  };
  return GridMap(width, height, std::move(blocked), cell(s), cell(g));
}

std::vector<GridMap> hand_written_maps() {
  static const char* const kMaps[] = {
      "SG\n",
      "S#G\n",
      "S...G\n",
      "S\nG\n",
      "S\n.\n.\n.\nG\n",
      "S.#\n.#.\n#.G\n",
      "S..\n.##\n.#G\n",
      "S...\n.##.\n.##.\n...G\n",
      "S.#..\n#.#.#\n..#..\n.###.\n....G\n",
      "SG\n##\n",
      "S..\n.#.\n..G\n",
      "S#.\n#..\n..G\n",
      "S.....\n####.#\n.....G\n",
      "S#..\n.#.#\n...G\n",
      "S..#\n##.#\n#...\n###G\n",
      "...\n.G.\nS..\n",
      "S....\n####.\n.G#..\n.###.\n.....\n",
      "G...S\n",
      "S.#.\n..#G\n..#.\n",
      "#S#\n#.#\n#.#\n#G#\n",
  };
  std::vector<GridMap> maps;
  for (const char* text : kMaps) maps.push_back(parse_map(text));
  return maps;
}

namespace {

Policy policy_for(std::size_t i) {
  switch (i % 4) {
    case 0: return AStarReplan{};
    case 1: return AlphaStarPolicy{AlphaParams(0, 1, Perimeter::g_nonaggressive)};
    case 2: return AlphaStarPolicy{AlphaParams(Rational(1, 5), 1, Perimeter::h_aggressive)};
    default: return DeaStarPolicy{PacParams(1.0, 0.5, 0, 1)};
  }
}

}  // namespace

std::vector<TracePair> ordered_trace_pairs(std::size_t count, std::uint64_t seed) {
  std::vector<TracePair> pairs;
  pairs.reserve(count);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const GridMap map = generate_obstacle_field(10, 10, 0.2, split_seed(seed, {i})).map;
    const SensingMode sensing = i % 2 == 0 ? SensingMode::omniscient() : SensingMode::within(2);
    Trace u = execute_realtime(map, Heuristic::manhattan, policy_for(i), sensing, split_seed(seed, {i, 1})).trace;

    Trace b;
    b.start = u.start;
    b.seed = u.seed;
    const std::size_t keep_moves = i % 10 == 0 ? u.moves.size() : rng.below(u.moves.size() + 1);
    b.moves.assign(u.moves.begin(), u.moves.begin() + static_cast<std::ptrdiff_t>(keep_moves));
    b.visit_count[b.start] = 1;
    for (const Cell c : b.moves) ++b.visit_count[c];
    b.reached_goal = keep_moves == u.moves.size() && u.reached_goal;
    for (const auto& c : u.considered)
      if (i % 10 == 0 || rng.uniform() < 0.7) b.considered.push_back(c);

    pairs.push_back(TracePair{std::move(b), std::move(u)});
  }
  return pairs;
}

}  // namespace deastar::support
