#include "halin/cycles.hpp"

#include <limits>
#include <queue>
#include <string>

#include "halin/errors.hpp"

namespace halin {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// Distances from `source` in H, ignoring the edge {skip_a, skip_b} when given.
std::vector<int> bfs(const HalinGraph& g, Vertex source, Vertex skip_a = -1, Vertex skip_b = -1) {
  std::vector<int> dist(g.vertex_count(), kUnreached);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.adjacent(x)) {
      if ((x == skip_a && y == skip_b) || (x == skip_b && y == skip_a)) continue;
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

struct CycleSearch {
  const HalinGraph& g;
  int k;
  Vertex start = 0;
  std::vector<int> dist_to_start;
  std::vector<char> on_path;
  std::vector<Vertex> path;

  // Extends `path` (ending at x, |path| vertices) using vertices > start only.
  bool extend(Vertex x) {
    const int len = static_cast<int>(path.size());
    if (len == k) return g.has_edge(x, start);
    for (Vertex y : g.adjacent(x)) {
      if (y <= start || on_path[y]) continue;
      // y would be vertex number len; closing needs dist(y, start) <= k - len.
      if (dist_to_start[y] > k - len) continue;
      on_path[y] = 1;
      path.push_back(y);
      if (extend(y)) return true;
      path.pop_back();
      on_path[y] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_cycle(const HalinGraph& g, int k) {
  if (k < 3) throw OutOfRange("cycle length must be at least 3, got " + std::to_string(k));
  const int n = g.vertex_count();
  if (k > n) return std::nullopt;
  CycleSearch search{g, k, 0, {}, {}, {}};
  search.on_path.assign(n, 0);
  for (Vertex s = 0; s + k <= n; ++s) {
    search.start = s;
    search.dist_to_start = bfs(g, s);
    search.path.assign(1, s);
    search.on_path[s] = 1;
    if (search.extend(s)) return search.path;
    search.on_path[s] = 0;
  }
  return std::nullopt;
}

ShortestCycle shortest_cycle_through_edge(const HalinGraph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw EdgeNotInGraph("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " is not in the graph");
  }
  const auto dist = bfs(g, e.v, e.u, e.v);
  ShortestCycle out;
  if (dist[e.u] == kUnreached) return out;  // bridge; impossible in a Halin graph
  out.length = dist[e.u] + 1;
  Vertex x = e.u;
  out.cycle.push_back(x);
  while (x != e.v) {
    for (Vertex y : g.adjacent(x)) {
      if ((x == e.u && y == e.v)) continue;
      if (dist[y] == dist[x] - 1) {
        x = y;
        break;
      }
    }
    out.cycle.push_back(x);
  }
  return out;
}

int girth(const HalinGraph& g) {
  int best = kUnreached;
  for (const Edge& e : g.edges()) {
    const auto c = shortest_cycle_through_edge(g, e);
    if (c.length > 0 && c.length < best) best = c.length;
  }
  return best == kUnreached ? 0 : best;
}

}  // namespace halin
