#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace dynres {

// Rank/select index over an append-ordered sequence with arbitrary erasure.
// Slots are assigned in insertion order and never move, so external handles
// stay valid; a Fenwick tree over alive bits gives O(log n) rank and select,
// enumeration skips dead slots. Insertion order here is always generation
// order (timestamps increase monotonically), which is the order rank/select
// is defined over.
template <typename T>
class OrderStatList {
 public:
  std::size_t append(T value) {
    std::size_t slot = values_.size();
    values_.push_back(std::move(value));
    alive_.push_back(true);
    // Fresh node covers (j - lowbit(j), j]; seed it with the alive counts of
    // the sub-ranges its child nodes already cover, plus the new element.
    std::size_t j = slot + 1;
    int node = 1;
    std::size_t lower = j - (j & (0 - j));
    for (std::size_t c = j - 1; c > lower; c -= c & (0 - c)) node += fenwick_[c - 1];
    fenwick_.push_back(node);
    ++live_;
    return slot;
  }

  void erase(std::size_t slot) {
    assert(slot < values_.size() && alive_[slot]);
    alive_[slot] = false;
    fenwick_add_(slot, -1);
    --live_;
  }

  bool alive(std::size_t slot) const { return slot < alive_.size() && alive_[slot]; }
  const T& operator[](std::size_t slot) const { return values_[slot]; }
  T& mutate(std::size_t slot) { return values_[slot]; }

  std::size_t live_count() const { return live_; }
  std::size_t slot_count() const { return values_.size(); }

  // Number of live slots strictly below slot_end.
  std::size_t live_before(std::size_t slot_end) const {
    if (slot_end > values_.size()) slot_end = values_.size();
    std::size_t sum = 0;
    for (std::size_t i = slot_end; i > 0; i -= i & (0 - i)) sum += static_cast<std::size_t>(fenwick_[i - 1]);
    return sum;
  }

  // Slot of the rank-th live entry (0-based, insertion order).
  std::size_t select(std::size_t rank) const {
    assert(rank < live_);
    std::size_t pos = 0;
    std::size_t remaining = rank + 1;
    std::size_t mask = highest_bit_(values_.size());
    while (mask > 0) {
      std::size_t next = pos + mask;
      if (next <= values_.size() && static_cast<std::size_t>(fenwick_[next - 1]) < remaining) {
        remaining -= static_cast<std::size_t>(fenwick_[next - 1]);
        pos = next;
      }
      mask >>= 1;
    }
    return pos;
  }

  template <typename F>
  void for_each_live(F&& f) const {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (alive_[i]) f(i, values_[i]);
  }

 private:
  static std::size_t highest_bit_(std::size_t n) {
    if (n == 0) return 0;
    std::size_t b = 1;
    while ((b << 1) <= n) b <<= 1;
    return b;
  }

  void fenwick_add_(std::size_t slot, int delta) {
    for (std::size_t i = slot + 1; i <= fenwick_.size(); i += i & (0 - i)) fenwick_[i - 1] += delta;
  }

  std::vector<T> values_;
  std::vector<bool> alive_;
  std::vector<int> fenwick_;
  std::size_t live_ = 0;
};

}  // namespace dynres
