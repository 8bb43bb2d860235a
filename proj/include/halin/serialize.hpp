#pragma once

#include <string>
#include <string_view>

#include "halin/halin_graph.hpp"

namespace halin {

inline constexpr std::string_view kHalin1Tag = "halin1";

/// `halin1 <tree>` with the tree written from its canonical root.
std::string serialize(const HalinGraph& g);

/// Parses `halin1 <tree>`; whitespace between tokens is ignored and vertices
/// are numbered in preorder. Throws ParseError on malformed text and
/// InvalidTree when the tree is not a characteristic tree.
HalinGraph parse(std::string_view text);

/// parse(serialize(g)): the canonical vertex numbering of g.
HalinGraph canonical_relabel(const HalinGraph& g);

}  // namespace halin
