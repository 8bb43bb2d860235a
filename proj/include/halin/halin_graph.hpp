#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace halin {

using Vertex = int;

/// An (unordered) edge. Use make_edge() for the normalized u < v form.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A tree together with a counterclockwise cyclic order of the neighbours at
/// every vertex. The constructor stores the rotation as given; use
/// tree_violations() or build_halin() to check the Halin tree invariants.
class PlaneTree {
 public:
  PlaneTree() = default;
  explicit PlaneTree(std::vector<std::vector<Vertex>> rotation);

  int size() const noexcept { return static_cast<int>(rotation_.size()); }
  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  std::span<const Vertex> neighbors(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotation() const noexcept { return rotation_; }

  /// Position of `u` in the rotation at `v`, or -1.
  int index_of(Vertex v, Vertex u) const;
  bool adjacent(Vertex a, Vertex b) const { return index_of(a, b) >= 0; }

  /// Neighbour following `u` in the counterclockwise order at `v`.
  Vertex successor(Vertex v, Vertex u) const;
  Vertex predecessor(Vertex v, Vertex u) const;

  std::vector<Vertex> leaves() const;
  int leaf_count() const;

  /// The reflected embedding (every rotation reversed).
  PlaneTree mirrored() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

 private:
  std::vector<std::vector<Vertex>> rotation_;
};

/// Every violated PlaneTree invariant, empty when the tree is a valid
/// characteristic tree.
std::vector<std::string> tree_violations(const PlaneTree& tree);

/// Leaves in the order met by the face traversal of the tree's single face
/// (next dart = successor of the reversed dart in counterclockwise order),
/// starting from the smallest leaf id. Requires a structurally sound tree.
std::vector<Vertex> face_traversal_leaves(const PlaneTree& tree);

/// H = T + C. Stores the tree and leaf cycle as given; build_halin() is the
/// validating constructor.
class HalinGraph {
 public:
  HalinGraph() = default;
  HalinGraph(PlaneTree tree, std::vector<Vertex> leaf_cycle);

  const PlaneTree& tree() const noexcept { return tree_; }
  std::span<const Vertex> leaf_cycle() const noexcept { return cycle_; }

  int vertex_count() const noexcept { return tree_.size(); }
  /// Number of distinct edges of T + C.
  int edge_count() const noexcept { return edge_count_; }
  int leaf_count() const noexcept { return static_cast<int>(cycle_.size()); }

  /// Neighbours in H, sorted by id.
  std::span<const Vertex> adjacent(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  bool is_leaf(Vertex v) const { return tree_.is_leaf(v); }
  bool is_cycle_edge(Vertex a, Vertex b) const;
  bool is_tree_edge(Vertex a, Vertex b) const { return tree_.adjacent(a, b); }

  /// Leaf after / before `leaf` on the outer cycle.
  Vertex cycle_next(Vertex leaf) const;
  Vertex cycle_prev(Vertex leaf) const;

  /// All edges of H, normalized and sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const HalinGraph& a, const HalinGraph& b) {
    return a.tree_ == b.tree_ && a.cycle_ == b.cycle_;
  }

 private:
  PlaneTree tree_;
  std::vector<Vertex> cycle_;
  std::vector<int> cycle_pos_;
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// Adds the outer cycle through the leaves in embedding order.
/// Throws InvalidTree when the tree is not a valid characteristic tree.
HalinGraph build_halin(PlaneTree tree);

struct ValidationReport {
  std::vector<std::string> violations;

  bool valid() const noexcept { return violations.empty(); }
};

/// Exhaustive check of the PlaneTree and HalinGraph invariants.
ValidationReport validate(const HalinGraph& g);

enum class VertexClass { Leaf, Interior, Branching, SemiBranching };

std::string_view to_string(VertexClass c);

VertexClass classify_vertex(const PlaneTree& tree, Vertex v);
std::vector<VertexClass> classify_vertices(const HalinGraph& g);

/// A bounded face, keyed by its outer-cycle edge. `cycle_edge` is ordered as
/// (u1, u2) with u2 = cycle_next(u1); `boundary` is u1, the tree path, u2.
struct BoundedFace {
  Edge cycle_edge;
  std::vector<Vertex> boundary;

  /// Boundary length in edges.
  int size() const noexcept { return static_cast<int>(boundary.size()); }
};

/// One face per outer-cycle edge, in leaf-cycle order.
std::vector<BoundedFace> bounded_faces(const HalinGraph& g);

/// Indices into `faces` of the bounded faces whose boundary uses the tree edge {a, b}.
std::vector<int> faces_incident_to_tree_edge(const std::vector<BoundedFace>& faces, Vertex a,
                                             Vertex b);

/// Index of the bounded face containing the angle a -> v -> b (b the
/// successor or predecessor of a at v), or -1.
int face_of_angle(const std::vector<BoundedFace>& faces, Vertex a, Vertex v, Vertex b);

}  // namespace halin
