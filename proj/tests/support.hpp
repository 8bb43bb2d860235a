#pragma once

#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "halin/constructions.hpp"
#include "halin/enumeration.hpp"
#include "halin/halin_graph.hpp"

namespace support {

using halin::HalinGraph;
using halin::PlaneTree;
using halin::Vertex;

/// Same embedded tree with vertex v renamed perm[v].
inline PlaneTree relabel(const PlaneTree& t, const std::vector<Vertex>& perm) {
  std::vector<std::vector<Vertex>> rot(t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    for (Vertex u : t.neighbors(v)) rot[perm[v]].push_back(perm[u]);
  }
  return PlaneTree(std::move(rot));
}

inline std::vector<Vertex> shuffled_ids(int n, std::uint64_t seed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Edges on the tree path between a and b.
inline int tree_distance(const PlaneTree& t, Vertex a, Vertex b) {
  std::vector<int> dist(t.size(), -1);
  std::queue<Vertex> q;
  dist[a] = 0;
  q.push(a);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    for (Vertex y : t.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist[b];
}

/// Distance from a to b in H without the edge {a, b}; -1 if unreachable.
inline int distance_without_edge(const HalinGraph& g, Vertex a, Vertex b) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[a] = 0;
  q.push(a);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    for (Vertex y : g.adjacent(x)) {
      if ((x == a && y == b) || (x == b && y == a)) continue;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist[b];
}

/// Every enumerated Halin graph with lo <= n <= hi.
inline std::vector<HalinGraph> all_graphs(int lo, int hi) {
  std::vector<HalinGraph> out;
  for (int n = lo; n <= hi; ++n) {
    auto part = halin::enumerate_halin(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// `count` seeded C4-free graphs with n drawn from [lo, hi].
inline std::vector<HalinGraph> random_corpus(int count, int lo, int hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<HalinGraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    out.push_back(halin::random_c4free_halin(n, rng()));
  }
  return out;
}

inline bool is_cycle_in(const HalinGraph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex v = cycle[i];
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    if (!g.has_edge(v, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace support
