#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace deastar {

/// Binary min-heap over dense integer ids [0, capacity) with O(log n)
/// re-keying and removal. Ties are impossible as long as the key type is
/// totally ordered and unique per id (the search keys carry an insertion
/// sequence number).
template <typename Key, typename Less = std::less<Key>>
class IndexedHeap {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit IndexedHeap(std::size_t capacity = 0, Less less = Less()) : pos_(capacity, npos), less_(std::move(less)) {}

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  bool contains(std::size_t id) const noexcept { return id < pos_.size() && pos_[id] != npos; }

  std::size_t top() const {
    if (heap_.empty()) throw std::out_of_range("top of empty heap");
    return heap_.front().id;
  }
  const Key& top_key() const {
    if (heap_.empty()) throw std::out_of_range("top of empty heap");
    return heap_.front().key;
  }
  const Key& key(std::size_t id) const { return heap_.at(pos_.at(id)).key; }

  void push(std::size_t id, Key key) {
    if (id >= pos_.size()) pos_.resize(id + 1, npos);
    if (pos_[id] != npos) throw std::logic_error("id already in heap");
    pos_[id] = heap_.size();
    heap_.push_back(Entry{id, std::move(key)});
    sift_up(heap_.size() - 1);
  }

  /// Replaces the key of an id already in the heap (either direction).
  void update(std::size_t id, Key key) {
    const std::size_t i = pos_.at(id);
    if (i == npos) throw std::logic_error("id not in heap");
    heap_[i].key = std::move(key);
    sift_down(sift_up(i));
  }

  std::size_t pop() {
    const std::size_t id = top();
    erase(id);
    return id;
  }

  void erase(std::size_t id) {
    const std::size_t i = pos_.at(id);
    if (i == npos) throw std::logic_error("id not in heap");
    const std::size_t last = heap_.size() - 1;
    if (i != last) {
      swap_entries(i, last);
      heap_.pop_back();
      pos_[id] = npos;
      sift_down(sift_up(i));
    } else {
      heap_.pop_back();
      pos_[id] = npos;
    }
  }

  /// Ids currently in the heap, in storage order (not sorted).
  std::vector<std::size_t> ids() const {
    std::vector<std::size_t> out;
    out.reserve(heap_.size());
    for (const auto& e : heap_) out.push_back(e.id);
    return out;
  }

 private:
  struct Entry {
    std::size_t id;
    Key key;
  };

  void swap_entries(std::size_t a, std::size_t b) {
    std::swap(heap_[a], heap_[b]);
    pos_[heap_[a].id] = a;
    pos_[heap_[b].id] = b;
  }

  std::size_t sift_up(std::size_t i) {
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!less_(heap_[i].key, heap_[parent].key)) break;
      swap_entries(i, parent);
      i = parent;
    }
    return i;
  }

  void sift_down(std::size_t i) {
    const std::size_t n = heap_.size();
    for (;;) {
      const std::size_t l = 2 * i + 1;
      const std::size_t r = l + 1;
      std::size_t best = i;
      if (l < n && less_(heap_[l].key, heap_[best].key)) best = l;
      if (r < n && less_(heap_[r].key, heap_[best].key)) best = r;
      if (best == i) return;
      swap_entries(i, best);
      i = best;
    }
  }

  std::vector<Entry> heap_;
  std::vector<std::size_t> pos_;
  Less less_;
};

}  // namespace deastar
