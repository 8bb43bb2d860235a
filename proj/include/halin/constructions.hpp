#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "halin/halin_graph.hpp"

namespace halin {

enum class BaseTreeId { T16, T17, T18 };

std::string_view to_string(BaseTreeId id);

/// One of the three base characteristic trees of the C4 extremal families,
/// with its marked attachment sites.
struct BaseTree {
  BaseTreeId id = BaseTreeId::T16;
  PlaneTree tree;
  std::vector<Vertex> attachment_sites;
};

/// Embedded tree transcribed from the drawing coordinates; the built Halin
/// graph is checked to be C4-free before returning.
BaseTree base_tree(BaseTreeId id);

/// K_{1,3} with one distinguished leaf, glued onto a tree by identifying the
/// distinguished leaf with a non-leaf site.
struct StarGadget {
  PlaneTree tree;
  Vertex center = 0;
  Vertex distinguished = 0;
};

StarGadget star_gadget();

/// Identifies the gadget's distinguished leaf with `site`: the gadget centre
/// becomes a new neighbour of `site`, appended after its existing neighbours,
/// with the two remaining gadget leaves hanging off it. Adds 3 vertices.
PlaneTree attach_star(const PlaneTree& tree, Vertex site, const StarGadget& gadget = star_gadget());

/// Closed form of ex_H(n, C4) for n >= 16, by the residue of n mod 3.
int c4_extremal_formula(int n);

/// Base tree chosen by n mod 3 plus (n - base)/3 star gadgets distributed
/// round-robin over the attachment sites. Throws OutOfRange for n < 16.
HalinGraph extremal_family(int n);

/// Star with k leaves closed into the wheel. Throws OutOfRange for k < 3.
HalinGraph wheel(int k);

/// A C4-free Halin graph on exactly n vertices, deterministic in `seed`,
/// grown from a 10-vertex C4-free seed by random leaf, edge-subdivision and
/// star attachments with rejection of any step that creates a 4-cycle. A dead
/// end restarts from the seed graph. Throws OutOfRange for n < 16 and
/// GenerationFailed if every restart dead-ends.
HalinGraph random_c4free_halin(int n, std::uint64_t seed);

}  // namespace halin
