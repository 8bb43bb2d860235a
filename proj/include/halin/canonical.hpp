#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "halin/halin_graph.hpp"

namespace halin {

/// Symmetry-invariant key of a plane tree: the least preorder
/// balanced-parentheses string over every choice of root, starting neighbour
/// at the root and orientation. Strings are ordered with ')' before '(', so
/// the canonical root is always a vertex with a leaf neighbour.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string parens) : parens_(std::move(parens)) {}

  const std::string& parens() const noexcept { return parens_; }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b);

 private:
  std::string parens_;
};

/// Compares two parenthesis strings in canonical order (')' < '(').
std::strong_ordering compare_parens(std::string_view a, std::string_view b);

/// Computes canonical codes and canonicity tests. Holds scratch buffers, so
/// keep one per thread and reuse it across trees.
class Canonicalizer {
 public:
  CanonicalCode code(const PlaneTree& tree);

  /// True when `parens`, the preorder string of `tree` rooted at vertex 0
  /// with rotation starting at index 0, is already the canonical code.
  bool is_canonical(const PlaneTree& tree, std::string_view parens);

 private:
  void load(const PlaneTree& tree);
  // Walks the tour from `start` dart in the given orientation, writing into
  // `out` and comparing against `best`. Returns <0 if the walk is smaller
  // than `best` (out then holds the full string), 0 if equal, >0 if larger
  // (walk abandoned).
  int walk(int start, bool mirrored, std::string_view best, std::string& out);

  int n_ = 0;
  std::vector<int> offset_;
  std::vector<int> degree_;
  std::vector<int> head_;
  std::vector<int> tail_;
  std::vector<int> twin_;
  std::vector<int> parent_;
  std::string scratch_;
};

CanonicalCode canonical_code(const PlaneTree& tree);

/// Preorder string of `tree` rooted at `root`, children of the root listed
/// from rotation index `start`, mirrored when requested.
std::string encode_rooted(const PlaneTree& tree, Vertex root, int start, bool mirrored);

/// Rebuilds a plane tree from a rooted preorder string: vertices numbered in
/// preorder, root rotation = children order, other rotations = parent then
/// children. Throws ParseError (offsets relative to `parens`).
PlaneTree decode_rooted(std::string_view parens);

}  // namespace halin
