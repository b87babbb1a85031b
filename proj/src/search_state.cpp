#include "deastar/search_state.hpp"

#include <algorithm>
#include <stdexcept>

#include "deastar/errors.hpp"

namespace deastar {

SearchState::SearchState(int width, int height, Cell goal, Heuristic heuristic, bool reopen_closed)
    : width_(width),
      height_(height),
      goal_(goal),
      heuristic_(heuristic),
      reopen_closed_(reopen_closed),
      records_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height)),
      status_(records_.size(), Status::unseen),
      by_priority_(records_.size()),
      by_f_(records_.size()) {}

void SearchState::assign_priority(NodeRecord& rec, const AlphaParams& params) {
  rec.alpha_true = alpha_predicate(params, rec, *this);
  rec.weight = weight(rec.alpha_true, params);
  rec.f_alpha = (Rational(1) + rec.weight) * Rational(rec.f);
  rec.seq = next_seq_++;
}

void SearchState::insert_start(Cell start, const AlphaParams& params) {
  if (start.x < 0 || start.y < 0 || start.x >= width_ || start.y >= height_)
    throw UsageError("start " + to_string(start) + " is out of bounds");
  if (status(start) != Status::unseen) throw UsageError("start already inserted");
  NodeRecord& rec = records_[index(start)];
  rec = NodeRecord{};
  rec.cell = start;
  rec.g = 0;
  rec.h = heuristic_value(heuristic_, start, goal_);
  rec.f = rec.h;
  assign_priority(rec, params);
  status_[index(start)] = Status::open;
  by_priority_.push(index(start), PriorityKey{rec.f_alpha, rec.h, rec.seq});
  by_f_.push(index(start), FKey{rec.f, rec.h, rec.seq});
  considered_.push_back(start);
}

const NodeRecord& SearchState::best_by_priority() const {
  if (by_priority_.empty()) throw UsageError("OPEN is empty");
  return records_[by_priority_.top()];
}

const NodeRecord& SearchState::best_by_f() const {
  if (by_f_.empty()) throw UsageError("OPEN is empty");
  return records_[by_f_.top()];
}

void SearchState::take(Cell cell) {
  if (!in_open(cell)) throw UsageError("cell " + to_string(cell) + " is not in OPEN");
  by_priority_.erase(index(cell));
  by_f_.erase(index(cell));
  status_[index(cell)] = Status::taken;
}

void SearchState::expand(Cell cell, const AlphaParams& params, const Passable& passable) {
  if (status(cell) != Status::taken)
    throw UsageError("cell " + to_string(cell) + " must be taken from OPEN before expansion");
  const NodeRecord parent = records_[index(cell)];

  for (const Cell d : kDirections) {
    const Cell next{cell.x + d.x, cell.y + d.y};
    if (next.x < 0 || next.y < 0 || next.x >= width_ || next.y >= height_) continue;
    if (!passable(next)) continue;
    const std::size_t i = index(next);
    const Status st = status_[i];
    const bool reopen = st == Status::closed && reopen_closed_;
    if (st != Status::open && st != Status::unseen && !reopen) continue;

    const Cost g = parent.g + 1;
    if (reopen) {
      NodeRecord& rec = records_[i];
      if (g >= rec.g) continue;
      rec.g = g;
      rec.f = g + rec.h;
      rec.parent = cell;
      assign_priority(rec, params);
      status_[i] = Status::open;
      by_priority_.push(i, PriorityKey{rec.f_alpha, rec.h, rec.seq});
      by_f_.push(i, FKey{rec.f, rec.h, rec.seq});
      ++reopened_count_;
      continue;
    }
    if (st == Status::open) {
      NodeRecord& rec = records_[i];
      if (g >= rec.g) continue;
      rec.g = g;
      rec.f = g + rec.h;
      rec.parent = cell;
      assign_priority(rec, params);
      by_priority_.update(i, PriorityKey{rec.f_alpha, rec.h, rec.seq});
      by_f_.update(i, FKey{rec.f, rec.h, rec.seq});
      continue;
    }

    NodeRecord& rec = records_[i];
    rec = NodeRecord{};
    rec.cell = next;
    rec.g = g;
    rec.h = heuristic_value(heuristic_, next, goal_);
    rec.f = g + rec.h;
    rec.parent = cell;
    assign_priority(rec, params);
    status_[i] = Status::open;
    by_priority_.push(i, PriorityKey{rec.f_alpha, rec.h, rec.seq});
    by_f_.push(i, FKey{rec.f, rec.h, rec.seq});
    considered_.push_back(next);
  }

  status_[index(cell)] = Status::closed;
  if (closed_count_ == 0) {
    max_closed_g_ = parent.g;
    min_closed_h_ = parent.h;
  } else {
    max_closed_g_ = std::max(max_closed_g_, parent.g);
    min_closed_h_ = std::min(min_closed_h_, parent.h);
  }
  ++closed_count_;
  last_expanded_ = cell;
}

void SearchState::invalidate(Cell cell) {
  if (!in_open(cell)) return;
  by_priority_.erase(index(cell));
  by_f_.erase(index(cell));
  status_[index(cell)] = Status::invalidated;
}

const NodeRecord* SearchState::record(Cell cell) const {
  if (cell.x < 0 || cell.y < 0 || cell.x >= width_ || cell.y >= height_) return nullptr;
  if (status_[index(cell)] == Status::unseen) return nullptr;
  return &records_[index(cell)];
}

std::vector<Cell> SearchState::open_cells() const {
  std::vector<Cell> out;
  for (const std::size_t i : by_priority_.ids()) out.push_back(records_[i].cell);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> SearchState::path_to(Cell cell) const {
  std::vector<Cell> path;
  const NodeRecord* rec = record(cell);
  if (rec == nullptr) throw UsageError("no record for " + to_string(cell));
  for (;;) {
    path.push_back(rec->cell);
    if (!rec->parent) break;
    rec = record(*rec->parent);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace deastar
