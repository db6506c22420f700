#pragma once

#include <vector>

#include "dynres/graph.hpp"
#include "dynres/types.hpp"

namespace dynres {

struct WeightedEdge {
  VertexId u;
  VertexId v;
  double weight;
};

// Weighted multigraph as a flat triple list; parallel triples are allowed and
// summed on Laplacian assembly. Weights must be strictly positive and finite.
struct WeightedGraphView {
  std::size_t vertex_count = 0;
  std::vector<WeightedEdge> edges;
};

inline WeightedGraphView unit_view(const DynamicMultigraph& g) {
  WeightedGraphView view;
  view.vertex_count = g.vertex_count();
  view.edges.reserve(g.edge_count());
  g.for_each_live_edge([&](EdgeId, VertexId u, VertexId v) { view.edges.push_back({u, v, 1.0}); });
  return view;
}

}  // namespace dynres
