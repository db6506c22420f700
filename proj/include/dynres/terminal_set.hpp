#pragma once

#include <vector>

#include "dynres/types.hpp"

namespace dynres {

// Terminal membership bitset plus insertion-ordered member list.
class TerminalSet {
 public:
  TerminalSet() = default;
  explicit TerminalSet(std::size_t vertex_count) : member_(vertex_count, 0) {}

  std::size_t vertex_count() const { return member_.size(); }
  std::size_t size() const { return order_.size(); }

  bool contains(VertexId u) const { return u < member_.size() && member_[u] != 0; }

  // Returns true when u was newly added.
  bool add(VertexId u) {
    if (u >= member_.size()) member_.resize(u + 1, 0);
    if (member_[u]) return false;
    member_[u] = 1;
    order_.push_back(u);
    return true;
  }

  const std::vector<VertexId>& members() const { return order_; }

 private:
  std::vector<char> member_;
  std::vector<VertexId> order_;
};

}  // namespace dynres
