#include "deastar/alpha_star.hpp"

#include <ostream>

#include "json.hpp"

namespace deastar {

SearchResult alpha_star(const GridMap& map, Heuristic h, const AlphaParams& params, const SelectionObserver& observer) {
  SearchState state(map.width(), map.height(), map.goal(), h, /*reopen_closed=*/true);
  state.insert_start(map.start(), params);
  const Passable passable = [&map](Cell c) { return !map.blocked(c); };

  SearchResult result;
  while (!state.open_empty()) {
    const NodeRecord& best = state.best_by_priority();
    if (observer) observer(state, best);
    result.trail.push_back(ExpansionRecord{best.cell, best.g, best.h, best.f, best.weight, best.f_alpha, best.alpha_true});
    ++result.expansions;

    const Cell cell = best.cell;
    state.take(cell);
    if (cell == map.goal()) {
      result.path = state.path_to(cell);
      result.cost = state.record(cell)->g;
      result.reopened = state.reopened_count();
      return result;
    }
    state.expand(cell, params, passable);
  }
  result.reopened = state.reopened_count();
  return result;
}

void write_trail_jsonl(std::ostream& out, const std::vector<ExpansionRecord>& trail) {
  for (const auto& e : trail) {
    nlohmann::ordered_json line;
    line["cell"] = {e.cell.x, e.cell.y};
    line["g"] = e.g;
    line["h"] = e.h;
    line["f"] = e.f;
    line["w"] = e.weight.to_double();
    line["f_alpha"] = e.f_alpha.to_double();
    line["alpha_true"] = e.alpha_true;
    out << line.dump() << '\n';
  }
}

}  // namespace deastar
