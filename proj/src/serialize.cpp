#include "halin/serialize.hpp"

#include <cctype>
#include <vector>

#include "halin/canonical.hpp"
#include "halin/errors.hpp"

namespace halin {

std::string serialize(const HalinGraph& g) {
  return std::string(kHalin1Tag) + " " + canonical_code(g.tree()).parens();
}

HalinGraph parse(std::string_view text) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i, kHalin1Tag.size()) != kHalin1Tag) {
    throw ParseError(i, "expected 'halin1' tag");
  }
  i += kHalin1Tag.size();

  // Collect the parenthesis tokens, remembering their byte offsets.
  std::string parens;
  std::vector<std::size_t> where;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '(' && c != ')') throw ParseError(i, std::string("unexpected character '") + c + "'");
    parens.push_back(c);
    where.push_back(i);
  }
  if (parens.empty()) throw ParseError(text.size(), "empty tree");
  try {
    return build_halin(decode_rooted(parens));
  } catch (const ParseError& e) {
    const std::size_t at = e.offset() < where.size() ? where[e.offset()] : text.size();
    throw ParseError(at, e.reason());
  }
}

HalinGraph canonical_relabel(const HalinGraph& g) { return parse(serialize(g)); }

}  // namespace halin
