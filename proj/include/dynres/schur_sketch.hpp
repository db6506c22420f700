#pragma once

#include <map>
#include <unordered_map>
#include <utility>

#include "dynres/types.hpp"
#include "dynres/weighted_view.hpp"

namespace dynres {

// One sampled Schur-complement edge: the walk's two terminal endpoints, its
// combined length, and weight 1/(rho * length).
struct HEdge {
  VertexId t1 = 0;
  VertexId t2 = 0;
  double weight = 0.0;
  std::uint32_t length = 0;
  std::uint64_t handle = kNoHandle;  // change-log handle, 0 outside dynamic use
};

// Weighted multigraph on the terminals, keyed by walk identity: exactly one
// H-edge per walk whose both halves reached T. Aggregation to a solver view
// is done lazily; self-loop H-edges (both endpoints equal) are kept here but
// contribute nothing to a Laplacian and are dropped from the aggregate.
class SchurSketch {
 public:
  void set(WalkId w, const HEdge& e) { edges_[w] = e; }

  void remove(WalkId w) { edges_.erase(w); }

  const HEdge* find(WalkId w) const {
    auto it = edges_.find(w);
    return it == edges_.end() ? nullptr : &it->second;
  }

  std::size_t edge_count() const { return edges_.size(); }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& [w, e] : edges_) f(w, e);
  }

  WeightedGraphView aggregate(std::size_t vertex_count) const {
    std::map<std::pair<VertexId, VertexId>, double> acc;
    for (const auto& [w, e] : edges_) {
      if (e.t1 == e.t2) continue;
      auto key = std::minmax(e.t1, e.t2);
      acc[{key.first, key.second}] += e.weight;
    }
    WeightedGraphView view;
    view.vertex_count = vertex_count;
    view.edges.reserve(acc.size());
    for (const auto& [pair, w] : acc) view.edges.push_back({pair.first, pair.second, w});
    return view;
  }

 private:
  std::unordered_map<WalkId, HEdge> edges_;
};

}  // namespace dynres
