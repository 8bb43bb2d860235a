#pragma once

#include <optional>
#include <vector>

#include "halin/halin_graph.hpp"

namespace halin {

/// A cycle of length exactly `k` in H, as its vertex sequence (first vertex
/// not repeated), or nullopt. Backtracking search from each start vertex in
/// ascending id order, so the witness is deterministic. Throws OutOfRange for k < 3.
std::optional<std::vector<Vertex>> find_cycle(const HalinGraph& g, int k);

inline bool contains_cycle(const HalinGraph& g, int k) { return find_cycle(g, k).has_value(); }

struct ShortestCycle {
  int length = 0;
  /// Starts at e.u and ends at e.v; the closing edge is e itself.
  std::vector<Vertex> cycle;
};

/// 1 + dist(u, v) in H - e. Among shortest witnesses the lexicographically
/// least vertex sequence from e.u is returned. Throws EdgeNotInGraph.
ShortestCycle shortest_cycle_through_edge(const HalinGraph& g, Edge e);

/// Minimum over all edges of shortest_cycle_through_edge.
int girth(const HalinGraph& g);

}  // namespace halin
