#include "halin/canonical.hpp"

#include <algorithm>

#include "halin/errors.hpp"

namespace halin {

namespace {

constexpr int rank(char c) { return c == '(' ? 1 : 0; }

}  // namespace

std::strong_ordering compare_parens(std::string_view a, std::string_view b) {
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[i]) return rank(a[i]) <=> rank(b[i]);
  }
  return a.size() <=> b.size();
}

std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
  return compare_parens(a.parens_, b.parens_);
}

void Canonicalizer::load(const PlaneTree& tree) {
  n_ = tree.size();
  offset_.assign(n_ + 1, 0);
  degree_.assign(n_, 0);
  for (Vertex v = 0; v < n_; ++v) {
    degree_[v] = tree.degree(v);
    offset_[v + 1] = offset_[v] + degree_[v];
  }
  const int darts = offset_[n_];
  head_.assign(darts, 0);
  tail_.assign(darts, 0);
  twin_.assign(darts, 0);
  for (Vertex v = 0; v < n_; ++v) {
    const auto nb = tree.neighbors(v);
    for (int i = 0; i < degree_[v]; ++i) {
      head_[offset_[v] + i] = nb[i];
      tail_[offset_[v] + i] = v;
    }
  }
  for (Vertex v = 0; v < n_; ++v) {
    for (int i = 0; i < degree_[v]; ++i) {
      const Vertex u = head_[offset_[v] + i];
      twin_[offset_[v] + i] = offset_[u] + tree.index_of(u, v);
    }
  }
  parent_.assign(n_, -1);
}

int Canonicalizer::walk(int start, bool mirrored, std::string_view best, std::string& out) {
  std::fill(parent_.begin(), parent_.end(), -1);
  out.clear();
  out.push_back('(');
  int state = best.empty() ? -1 : 0;
  const int steps = offset_[n_];
  int d = start;
  for (int step = 0; step < steps; ++step) {
    const int a = tail_[d];
    const int b = head_[d];
    char c;
    if (parent_[a] == b) {
      c = ')';
    } else {
      c = '(';
      parent_[b] = a;
    }
    out.push_back(c);
    if (state == 0) {
      const char ref = best[out.size() - 1];
      if (c != ref) {
        if (rank(c) > rank(ref)) return 1;
        state = -1;
      }
    }
    const int t = twin_[d];
    const int v = tail_[t];
    const int idx = t - offset_[v];
    const int deg = degree_[v];
    d = offset_[v] + (mirrored ? (idx + deg - 1) % deg : (idx + 1) % deg);
  }
  out.push_back(')');
  return state;
}

CanonicalCode Canonicalizer::code(const PlaneTree& tree) {
  load(tree);
  std::string best;
  for (int d = 0; d < offset_[n_]; ++d) {
    for (const bool mirrored : {false, true}) {
      if (walk(d, mirrored, best, scratch_) < 0) best = scratch_;
    }
  }
  if (n_ == 1) best = "()";
  return CanonicalCode(std::move(best));
}

bool Canonicalizer::is_canonical(const PlaneTree& tree, std::string_view parens) {
  load(tree);
  for (int d = 0; d < offset_[n_]; ++d) {
    // Roots that are leaves always lose to a root with a leaf neighbour.
    if (degree_[tail_[d]] == 1) continue;
    for (const bool mirrored : {false, true}) {
      if (walk(d, mirrored, parens, scratch_) < 0) return false;
    }
  }
  return true;
}

CanonicalCode canonical_code(const PlaneTree& tree) {
  Canonicalizer c;
  return c.code(tree);
}

std::string encode_rooted(const PlaneTree& tree, Vertex root, int start, bool mirrored) {
  std::string out = "(";
  struct Frame {
    Vertex v;
    Vertex parent;
    int emitted;  // children written so far
    int first;    // rotation index of the first child
  };
  const auto step = [&](Vertex v, int idx) {
    const int deg = tree.degree(v);
    return mirrored ? (idx + deg - 1) % deg : (idx + 1) % deg;
  };
  std::vector<Frame> stack;
  stack.push_back({root, -1, 0, start});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const int deg = tree.degree(f.v);
    const int children = f.parent < 0 ? deg : deg - 1;
    if (f.emitted == children) {
      out.push_back(')');
      stack.pop_back();
      continue;
    }
    int idx = f.first;
    for (int i = 0; i < f.emitted; ++i) idx = step(f.v, idx);
    const Vertex child = tree.neighbors(f.v)[idx];
    ++f.emitted;
    out.push_back('(');
    const int back = tree.index_of(child, f.v);
    stack.push_back({child, f.v, 0, step(child, back)});
  }
  return out;
}

PlaneTree decode_rooted(std::string_view parens) {
  if (parens.empty()) throw ParseError(0, "empty tree");
  std::vector<std::vector<Vertex>> rotation;
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < parens.size(); ++i) {
    const char c = parens[i];
    if (c == '(') {
      if (!rotation.empty() && stack.empty()) {
        throw ParseError(i, "trailing content after tree");
      }
      const Vertex v = static_cast<Vertex>(rotation.size());
      rotation.emplace_back();
      if (!stack.empty()) {
        rotation[stack.back()].push_back(v);
        rotation[v].push_back(stack.back());
      }
      stack.push_back(v);
    } else if (c == ')') {
      if (stack.empty()) throw ParseError(i, "unbalanced: unmatched ')'");
      stack.pop_back();
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  if (!stack.empty()) throw ParseError(parens.size(), "unbalanced: missing ')'");
  return PlaneTree(std::move(rotation));
}

}  // namespace halin
