#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "dynres/graph.hpp"
#include "dynres/terminal_set.hpp"

namespace dynres {

// One simulated half walk: vertices[0] is the start, edges[i] joins
// vertices[i] and vertices[i+1]. reached_terminal is false when the step cap
// was hit (or the walk got stuck on an isolated vertex) before reaching T.
struct WalkRun {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  bool reached_terminal = false;

  std::size_t length() const { return edges.size(); }
};

// Random walk from `start` until it hits T or has taken max_steps steps.
// A walk starting in T stops immediately with length zero. When forced_first
// is set the first step uses exactly that edge (the start must not be a
// terminal then, and the edge must be incident to it).
inline WalkRun run_walk(const DynamicMultigraph& g, const TerminalSet& terminals, VertexId start,
                        std::size_t max_steps, RandomStream& rng,
                        std::optional<EdgeId> forced_first = std::nullopt) {
  WalkRun run;
  run.vertices.push_back(start);
  if (forced_first) {
    assert(!terminals.contains(start));
    run.edges.push_back(*forced_first);
    run.vertices.push_back(g.opposite(*forced_first, start));
  }
  for (;;) {
    VertexId cur = run.vertices.back();
    if (terminals.contains(cur)) {
      run.reached_terminal = true;
      break;
    }
    if (run.edges.size() >= max_steps) break;
    if (g.degree(cur) == 0) break;  // stranded; counts as capped
    IncidenceEntry step = g.sample_incident(cur, rng);
    run.edges.push_back(step.edge);
    run.vertices.push_back(step.other);
  }
  return run;
}

}  // namespace dynres
