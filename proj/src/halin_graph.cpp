#include "halin/halin_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "halin/errors.hpp"

namespace halin {

PlaneTree::PlaneTree(std::vector<std::vector<Vertex>> rotation) : rotation_(std::move(rotation)) {}

int PlaneTree::index_of(Vertex v, Vertex u) const {
  const auto& nb = rotation_[v];
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (nb[i] == u) return static_cast<int>(i);
  }
  return -1;
}

Vertex PlaneTree::successor(Vertex v, Vertex u) const {
  const auto& nb = rotation_[v];
  const int i = index_of(v, u);
  return nb[(static_cast<std::size_t>(i) + 1) % nb.size()];
}

Vertex PlaneTree::predecessor(Vertex v, Vertex u) const {
  const auto& nb = rotation_[v];
  const int i = index_of(v, u);
  return nb[(static_cast<std::size_t>(i) + nb.size() - 1) % nb.size()];
}

std::vector<Vertex> PlaneTree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

int PlaneTree::leaf_count() const {
  int count = 0;
  for (const auto& nb : rotation_) count += nb.size() == 1 ? 1 : 0;
  return count;
}

PlaneTree PlaneTree::mirrored() const {
  auto rot = rotation_;
  for (auto& nb : rot) std::reverse(nb.begin(), nb.end());
  return PlaneTree(std::move(rot));
}

namespace {

// Checks that make the rotation usable as a graph at all (ids in range,
// symmetric, simple). Face traversal and connectivity need these.
std::vector<std::string> structural_violations(const PlaneTree& tree) {
  std::vector<std::string> out;
  const int n = tree.size();
  for (Vertex v = 0; v < n; ++v) {
    auto nb = std::vector<Vertex>(tree.neighbors(v).begin(), tree.neighbors(v).end());
    for (Vertex u : nb) {
      if (u < 0 || u >= n) {
        out.push_back("neighbor id out of range at vertex " + std::to_string(v));
        continue;
      }
      if (u == v) out.push_back("self loop at vertex " + std::to_string(v));
      if (u != v && !tree.adjacent(u, v)) {
        out.push_back("asymmetric adjacency: " + std::to_string(u) + " listed at " +
                      std::to_string(v) + " but not conversely");
      }
    }
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      out.push_back("repeated neighbor at vertex " + std::to_string(v));
    }
  }
  return out;
}

bool connected(const PlaneTree& tree) {
  const int n = tree.size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : tree.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

}  // namespace

std::vector<std::string> tree_violations(const PlaneTree& tree) {
  std::vector<std::string> out;
  const int n = tree.size();
  if (n < 4) {
    out.push_back("too few vertices: n=" + std::to_string(n) + " < 4");
    if (n == 0) return out;
  }
  auto structural = structural_violations(tree);
  if (!structural.empty()) {
    out.insert(out.end(), structural.begin(), structural.end());
    return out;
  }
  int degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) degree_sum += tree.degree(v);
  if (degree_sum != 2 * (n - 1)) {
    out.push_back("edge count " + std::to_string(degree_sum / 2) + " != n-1 = " +
                  std::to_string(n - 1));
  }
  if (!connected(tree)) out.push_back("disconnected");
  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) == 2) out.push_back("degree-2 non-leaf: vertex " + std::to_string(v));
    if (tree.degree(v) == 0) out.push_back("isolated vertex " + std::to_string(v));
  }
  const int leaves = tree.leaf_count();
  if (leaves < 3) out.push_back("fewer than 3 leaves");
  if (leaves == n) out.push_back("no non-leaf vertex");
  return out;
}

std::vector<Vertex> face_traversal_leaves(const PlaneTree& tree) {
  std::vector<Vertex> out;
  const auto leaves = tree.leaves();
  if (leaves.empty()) return out;
  const Vertex start = leaves.front();
  Vertex a = start;
  Vertex b = tree.neighbors(start)[0];
  out.push_back(start);
  // Each dart is used once, so the walk closes after 2(n-1) steps.
  const int max_steps = 2 * tree.size();
  for (int step = 0; step < max_steps; ++step) {
    const Vertex next = tree.successor(b, a);
    a = b;
    b = next;
    if (tree.is_leaf(a)) {
      if (a == start) break;
      out.push_back(a);
    }
  }
  return out;
}

HalinGraph::HalinGraph(PlaneTree tree, std::vector<Vertex> leaf_cycle)
    : tree_(std::move(tree)), cycle_(std::move(leaf_cycle)) {
  const int n = tree_.size();
  cycle_pos_.assign(n, -1);
  adjacency_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : tree_.neighbors(v)) {
      if (u >= 0 && u < n) adjacency_[v].push_back(u);
    }
  }
  const int len = static_cast<int>(cycle_.size());
  for (int i = 0; i < len; ++i) {
    const Vertex a = cycle_[i];
    if (a < 0 || a >= n) continue;
    cycle_pos_[a] = i;
    const Vertex b = cycle_[(i + 1) % len];
    if (len >= 2 && b >= 0 && b < n && a != b) {
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
  }
  int degree_sum = 0;
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    degree_sum += static_cast<int>(nb.size());
  }
  edge_count_ = degree_sum / 2;
}

bool HalinGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= vertex_count() || b < 0 || b >= vertex_count()) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool HalinGraph::is_cycle_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= vertex_count() || b < 0 || b >= vertex_count()) return false;
  if (cycle_pos_[a] < 0 || cycle_pos_[b] < 0) return false;
  return cycle_next(a) == b || cycle_prev(a) == b;
}

Vertex HalinGraph::cycle_next(Vertex leaf) const {
  const int len = static_cast<int>(cycle_.size());
  return cycle_[(cycle_pos_[leaf] + 1) % len];
}

Vertex HalinGraph::cycle_prev(Vertex leaf) const {
  const int len = static_cast<int>(cycle_.size());
  return cycle_[(cycle_pos_[leaf] + len - 1) % len];
}

std::vector<Edge> HalinGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (Vertex u : adjacency_[v]) {
      if (v < u) out.push_back({v, u});
    }
  }
  return out;
}

HalinGraph build_halin(PlaneTree tree) {
  auto problems = tree_violations(tree);
  if (!problems.empty()) {
    std::string msg = "invalid characteristic tree:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InvalidTree(msg);
  }
  auto cycle = face_traversal_leaves(tree);
  return HalinGraph(std::move(tree), std::move(cycle));
}

namespace {

bool same_cyclic_sequence(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  const std::size_t shift = static_cast<std::size_t>(it - b.begin());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[(i + shift) % b.size()]) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate(const HalinGraph& g) {
  ValidationReport report;
  const PlaneTree& tree = g.tree();
  report.violations = tree_violations(tree);
  const int n = tree.size();
  if (n == 0 || !structural_violations(tree).empty()) {
    return report;
  }

  auto cycle = std::vector<Vertex>(g.leaf_cycle().begin(), g.leaf_cycle().end());
  auto sorted_cycle = cycle;
  std::sort(sorted_cycle.begin(), sorted_cycle.end());
  const auto leaves = tree.leaves();
  const bool same_set = sorted_cycle == leaves;
  if (!same_set) {
    report.violations.push_back("leaf cycle is not exactly the leaf set");
  } else if (!same_cyclic_sequence(cycle, face_traversal_leaves(tree))) {
    report.violations.push_back("leaf order mismatch: leaf cycle disagrees with the embedding");
  }

  const int expected = (n - 1) + static_cast<int>(cycle.size());
  if (g.edge_count() != expected) {
    report.violations.push_back("edge count identity: e(H)=" + std::to_string(g.edge_count()) +
                                " but n-1+L=" + std::to_string(expected));
  }
  return report;
}

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Leaf: return "leaf";
    case VertexClass::Interior: return "interior";
    case VertexClass::Branching: return "branching";
    case VertexClass::SemiBranching: return "semi-branching";
  }
  return "?";
}

VertexClass classify_vertex(const PlaneTree& tree, Vertex v) {
  if (tree.is_leaf(v)) return VertexClass::Leaf;
  int non_leaf = 0;
  int leaf = 0;
  for (Vertex u : tree.neighbors(v)) {
    if (tree.is_leaf(u)) {
      ++leaf;
    } else {
      ++non_leaf;
    }
  }
  if (leaf == 0) return VertexClass::Interior;
  if (non_leaf <= 1) return VertexClass::Branching;
  return VertexClass::SemiBranching;
}

std::vector<VertexClass> classify_vertices(const HalinGraph& g) {
  std::vector<VertexClass> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = classify_vertex(g.tree(), v);
  return out;
}

std::vector<BoundedFace> bounded_faces(const HalinGraph& g) {
  const PlaneTree& tree = g.tree();
  std::vector<BoundedFace> faces;
  const auto cycle = g.leaf_cycle();
  faces.reserve(cycle.size());
  // Between consecutive leaves the face walk never backtracks, so it is the
  // tree path joining them.
  for (Vertex u1 : cycle) {
    BoundedFace face;
    face.boundary.push_back(u1);
    Vertex a = u1;
    Vertex b = tree.neighbors(u1)[0];
    while (!tree.is_leaf(b)) {
      face.boundary.push_back(b);
      const Vertex next = tree.successor(b, a);
      a = b;
      b = next;
    }
    face.boundary.push_back(b);
    face.cycle_edge = Edge{u1, b};
    faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<int> faces_incident_to_tree_edge(const std::vector<BoundedFace>& faces, Vertex a,
                                             Vertex b) {
  std::vector<int> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& bd = faces[i].boundary;
    for (std::size_t j = 0; j + 1 < bd.size(); ++j) {
      if ((bd[j] == a && bd[j + 1] == b) || (bd[j] == b && bd[j + 1] == a)) {
        out.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  return out;
}

int face_of_angle(const std::vector<BoundedFace>& faces, Vertex a, Vertex v, Vertex b) {
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& bd = faces[i].boundary;
    for (std::size_t j = 0; j + 2 < bd.size(); ++j) {
      if (bd[j + 1] != v) continue;
      if ((bd[j] == a && bd[j + 2] == b) || (bd[j] == b && bd[j + 2] == a)) {
        return static_cast<int>(i);
      }
    }
  }
  return -1;
}

}  // namespace halin
