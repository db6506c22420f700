#pragma once

#include <cassert>
#include <span>
#include <utility>
#include <vector>

#include "dynres/errors.hpp"
#include "dynres/random.hpp"
#include "dynres/types.hpp"

namespace dynres {

struct IncidenceEntry {
  EdgeId edge;
  VertexId other;
};

// Unweighted undirected multigraph with a fixed vertex set, stable edge ids,
// and O(1) expected uniform sampling of an incident edge. Parallel edges are
// allowed, self-loops are rejected. Incidence sequences use swap-remove with
// a per-endpoint back index, so deletion is O(1); incidence order is not part
// of any contract.
class DynamicMultigraph {
 public:
  explicit DynamicMultigraph(std::size_t vertex_count)
      : incidence_(vertex_count) {}

  std::size_t vertex_count() const { return incidence_.size(); }
  std::size_t edge_count() const { return live_edges_; }

  // One past the largest id ever assigned (including deleted ids).
  std::size_t edge_id_bound() const { return edges_.size(); }

  bool edge_live(EdgeId e) const { return e < edges_.size() && edges_[e].live; }

  std::size_t degree(VertexId u) const {
    check_vertex_(u);
    return incidence_[u].size();
  }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    check_edge_(e);
    return {edges_[e].u, edges_[e].v};
  }

  VertexId opposite(EdgeId e, VertexId u) const {
    check_edge_(e);
    const EdgeRecord& rec = edges_[e];
    assert(rec.u == u || rec.v == u);
    return rec.u == u ? rec.v : rec.u;
  }

  EdgeId insert_edge(VertexId u, VertexId v) {
    if (u == v) throw SelfLoopRejected("self-loop (" + std::to_string(u) + ") rejected");
    check_vertex_(u);
    check_vertex_(v);
    EdgeId e = static_cast<EdgeId>(edges_.size());
    EdgeRecord rec;
    rec.u = u;
    rec.v = v;
    rec.pos_at_u = static_cast<std::uint32_t>(incidence_[u].size());
    rec.pos_at_v = static_cast<std::uint32_t>(incidence_[v].size());
    rec.live = true;
    edges_.push_back(rec);
    incidence_[u].push_back({e, v});
    incidence_[v].push_back({e, u});
    ++live_edges_;
    return e;
  }

  std::pair<VertexId, VertexId> delete_edge(EdgeId e) {
    check_edge_(e);
    EdgeRecord& rec = edges_[e];
    remove_incidence_(rec.u, rec.pos_at_u);
    remove_incidence_(rec.v, rec.pos_at_v);
    rec.live = false;
    --live_edges_;
    return {rec.u, rec.v};
  }

  // Uniform over the incidence sequence, so a parallel bundle weights its
  // neighbor by multiplicity. Each entry has probability exactly 1/deg(u).
  IncidenceEntry sample_incident(VertexId u, RandomStream& rng) const {
    check_vertex_(u);
    const auto& inc = incidence_[u];
    if (inc.empty()) throw IsolatedVertex("vertex " + std::to_string(u) + " has no incident edge");
    return inc[rng.uniform_index(inc.size())];
  }

  std::span<const IncidenceEntry> incident(VertexId u) const {
    check_vertex_(u);
    return {incidence_[u].data(), incidence_[u].size()};
  }

  template <typename F>
  void for_each_live_edge(F&& f) const {
    for (EdgeId e = 0; e < edges_.size(); ++e)
      if (edges_[e].live) f(e, edges_[e].u, edges_[e].v);
  }

 private:
  struct EdgeRecord {
    VertexId u = 0, v = 0;
    std::uint32_t pos_at_u = 0, pos_at_v = 0;
    bool live = false;
  };

  void check_vertex_(VertexId u) const {
    if (u >= incidence_.size()) throw UnknownVertex("vertex " + std::to_string(u) + " out of range");
  }

  void check_edge_(EdgeId e) const {
    if (!edge_live(e)) throw UnknownEdge("edge " + std::to_string(e) + " is not live");
  }

  void remove_incidence_(VertexId at, std::uint32_t pos) {
    auto& inc = incidence_[at];
    assert(pos < inc.size());
    std::uint32_t last = static_cast<std::uint32_t>(inc.size() - 1);
    if (pos != last) {
      inc[pos] = inc[last];
      EdgeRecord& moved = edges_[inc[pos].edge];
      if (moved.u == at)
        moved.pos_at_u = pos;
      else
        moved.pos_at_v = pos;
    }
    inc.pop_back();
  }

  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<IncidenceEntry>> incidence_;
  std::size_t live_edges_ = 0;
};

}  // namespace dynres
