#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halin/halin_graph.hpp"

namespace halin {

/// The three edge-count-preserving surgeries on C4-free Halin graphs.
enum class ReductionRule {
  LeafRemoval,  // drop a leaf of a semi-branching vertex of degree >= 4; e drops by 2
  Smoothing,    // drop a degree-3 semi-branching vertex and its leaf; e drops by 3
  Contraction,  // contract an internal edge whose two faces have size >= 6; e drops by 1
};

std::string_view to_string(ReductionRule rule);
/// Accepts "leaf-removal", "smoothing", "contraction". Throws OutOfRange.
ReductionRule parse_rule(std::string_view name);
/// Expected e(H) - e(H') for a rule.
int edge_delta(ReductionRule rule);

struct ReductionStep {
  ReductionRule rule = ReductionRule::LeafRemoval;
  /// (v, u) for LeafRemoval, (u, v, w) for Smoothing, (a, b) for Contraction;
  /// ids refer to the input graph.
  std::vector<Vertex> site;
  int before_edges = 0;
  int after_edges = 0;
  HalinGraph result;
};

struct LongestPathReport {
  std::vector<Vertex> path;
  int length = 0;
  std::array<Vertex, 2> semi_pendants{};
};

/// Longest path of the characteristic tree, lexicographically least vertex
/// sequence among all longest paths.
LongestPathReport longest_path(const HalinGraph& g);

/// Length of a longest path in the tree (double breadth-first sweep).
int tree_diameter(const PlaneTree& tree);

/// All longest paths' endpoint pairs (a < b) at distance = diameter of T.
std::vector<std::pair<Vertex, Vertex>> diametral_pairs(const PlaneTree& tree);

/// Reason the site is not applicable, or nullopt when it is. C4-freeness of
/// `g` is part of every rule's precondition.
std::optional<std::string> leaf_removal_blocker(const HalinGraph& g, Vertex v, Vertex u);
std::optional<std::string> smoothing_blocker(const HalinGraph& g, Vertex u, Vertex v, Vertex w);
std::optional<std::string> contraction_blocker(const HalinGraph& g, Edge e);

/// Each throws PreconditionFailed with the blocker's reason.
ReductionStep leaf_removal(const HalinGraph& g, Vertex v, Vertex u);
ReductionStep smoothing(const HalinGraph& g, Vertex u, Vertex v, Vertex w);
ReductionStep contraction(const HalinGraph& g, Edge e);

struct ReductionSite {
  ReductionRule rule = ReductionRule::LeafRemoval;
  std::vector<Vertex> site;
};

ReductionStep apply_reduction(const HalinGraph& g, const ReductionSite& site);

/// Every applicable site of `rule`, in ascending scan order.
std::vector<ReductionSite> applicable_sites(const HalinGraph& g, ReductionRule rule);

/// First applicable site scanning LeafRemoval, then Contraction, then
/// Smoothing, each in ascending vertex/edge order.
std::optional<ReductionSite> find_reduction(const HalinGraph& g);

}  // namespace halin
