#include "halin/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "halin/cycles.hpp"
#include "halin/errors.hpp"
#include "halin/serialize.hpp"

namespace halin {

namespace {

struct Point {
  double x;
  double y;
};

struct Drawing {
  std::vector<Point> points;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> dark;
};

// Rotation system of a straight-line drawing: neighbours sorted by angle,
// counterclockwise.
PlaneTree from_drawing(const Drawing& d) {
  std::vector<std::vector<Vertex>> rotation(d.points.size());
  for (auto [a, b] : d.edges) {
    rotation[a].push_back(b);
    rotation[b].push_back(a);
  }
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    const Point c = d.points[v];
    std::sort(rotation[v].begin(), rotation[v].end(), [&](Vertex p, Vertex q) {
      return std::atan2(d.points[p].y - c.y, d.points[p].x - c.x) <
             std::atan2(d.points[q].y - c.y, d.points[q].x - c.x);
    });
  }
  return PlaneTree(std::move(rotation));
}

// Coordinates and edges of the base-tree drawings.
Drawing drawing_t16() {
  return {{{0, 0},
           {0, 10},
           {9.5, 3.1},
           {-9.5, 3.1},
           {5.9, -8.1},
           {-5.9, -8.1},
           {14.8, 2.3},
           {13.4, 6.8},
           {-14.8, 2.3},
           {-13.4, 6.8},
           {2.3, 14.8},
           {-2.3, 14.8},
           {10.6, -10.6},
           {6.8, -13.4},
           {-10.6, -10.6},
           {-6.8, -13.4}},
          {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}, {1, 10},
           {1, 11}, {4, 12}, {4, 13}, {5, 14}, {5, 15}},
          {0}};
}

Drawing drawing_t17() {
  return {{{-5, 0},
           {5, 0},
           {13.1, 5.9},
           {18.4, 6.8},
           {15.6, 10.6},
           {13.1, -5.9},
           {18.4, -6.8},
           {15.6, -10.6},
           {-8.1, 9.5},
           {-11.8, 13.4},
           {-7.3, 14.8},
           {-8.1, -9.5},
           {-11.8, -13.4},
           {-7.3, -14.8},
           {-15, 0},
           {-19.8, 2.3},
           {-19.8, -2.3}},
          {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {1, 5}, {5, 6}, {5, 7}, {0, 8}, {8, 9}, {8, 10},
           {0, 11}, {11, 12}, {11, 13}, {0, 14}, {14, 15}, {14, 16}},
          {0, 1}};
}

Drawing drawing_t18() {
  return {{{-5, 0},
           {5, 0},
           {13.1, 5.9},
           {18.4, 6.8},
           {15.6, 10.6},
           {13.1, -5.9},
           {18.4, -6.8},
           {15.6, -10.6},
           {-15, 0},
           {-23.1, 5.9},
           {-28.4, 6.8},
           {-25.6, 10.6},
           {-23.1, -5.9},
           {-25.6, -10.6},
           {-28.4, -6.8},
           {0.9, 8.1},
           {-10.9, 8.1},
           {-5, -10}},
          {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {1, 5}, {5, 6}, {5, 7}, {9, 10}, {9, 11}, {12, 13},
           {12, 14}, {0, 8}, {8, 9}, {8, 12}, {0, 15}, {0, 16}, {0, 17}},
          {8, 1}};
}

// K_{1,3}: centre, the two free leaves, and the dark-spotted leaf.
Drawing drawing_star() {
  return {{{-5, 0}, {-10.9, 8.1}, {0.9, 8.1}, {-5, -10}}, {{0, 1}, {0, 2}, {0, 3}}, {3}};
}

void require_c4_free(const HalinGraph& g, const std::string& what) {
  if (auto c = find_cycle(g, 4)) {
    throw PostconditionFailed(what + " contains a 4-cycle");
  }
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

std::string_view to_string(BaseTreeId id) {
  switch (id) {
    case BaseTreeId::T16: return "t16";
    case BaseTreeId::T17: return "t17";
    case BaseTreeId::T18: return "t18";
  }
  return "?";
}

BaseTree base_tree(BaseTreeId id) {
  Drawing d;
  switch (id) {
    case BaseTreeId::T16: d = drawing_t16(); break;
    case BaseTreeId::T17: d = drawing_t17(); break;
    case BaseTreeId::T18: d = drawing_t18(); break;
  }
  BaseTree out{id, from_drawing(d), d.dark};
  require_c4_free(build_halin(out.tree), std::string("base tree ") + std::string(to_string(id)));
  return out;
}

StarGadget star_gadget() {
  const Drawing d = drawing_star();
  return {from_drawing(d), 0, d.dark.front()};
}

PlaneTree attach_star(const PlaneTree& tree, Vertex site, const StarGadget& gadget) {
  if (site < 0 || site >= tree.size() || tree.is_leaf(site)) {
    throw PreconditionFailed("attachment site must be a non-leaf vertex");
  }
  auto rotation = tree.rotation();
  const Vertex base = tree.size();
  // Gadget vertex g maps to base + (rank of g among non-distinguished vertices).
  std::vector<Vertex> image(gadget.tree.size(), -1);
  Vertex next = base;
  for (Vertex g = 0; g < gadget.tree.size(); ++g) {
    image[g] = g == gadget.distinguished ? site : next++;
  }
  rotation.resize(next);
  for (Vertex g = 0; g < gadget.tree.size(); ++g) {
    if (g == gadget.distinguished) continue;
    // Rotate so the list starts at the neighbour on the site side.
    const auto nb = gadget.tree.neighbors(g);
    const int from = g == gadget.center ? gadget.tree.index_of(g, gadget.distinguished) : 0;
    auto& out = rotation[image[g]];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      out.push_back(image[nb[(from + i) % nb.size()]]);
    }
  }
  rotation[site].push_back(image[gadget.center]);
  return PlaneTree(std::move(rotation));
}

int c4_extremal_formula(int n) {
  if (n < 16) throw OutOfRange("the closed form holds for n >= 16, got " + std::to_string(n));
  switch ((n - 1) % 3) {
    case 0: return 5 * (n - 1) / 3;
    case 1: return 5 * (n - 2) / 3 + 1;
    default: return 5 * (n - 3) / 3 + 3;
  }
}

HalinGraph extremal_family(int n) {
  if (n < 16) throw OutOfRange("extremal family needs n >= 16, got " + std::to_string(n));
  BaseTreeId id = BaseTreeId::T18;
  if (n % 3 == 1) id = BaseTreeId::T16;
  if (n % 3 == 2) id = BaseTreeId::T17;
  const BaseTree base = base_tree(id);
  const StarGadget gadget = star_gadget();
  PlaneTree tree = base.tree;
  HalinGraph g = build_halin(tree);
  const int gadgets = (n - tree.size()) / 3;
  for (int i = 0; i < gadgets; ++i) {
    const Vertex site = base.attachment_sites[i % base.attachment_sites.size()];
    tree = attach_star(tree, site, gadget);
    HalinGraph next = build_halin(tree);
    if (next.vertex_count() != g.vertex_count() + 3 || next.edge_count() != g.edge_count() + 5) {
      throw PostconditionFailed("star attachment did not add (3 vertices, 5 edges)");
    }
    require_c4_free(next, "extremal family member");
    g = std::move(next);
  }
  return g;
}

HalinGraph wheel(int k) {
  if (k < 3) throw OutOfRange("wheel needs at least 3 spokes, got " + std::to_string(k));
  std::vector<std::vector<Vertex>> rotation(k + 1);
  for (Vertex i = 1; i <= k; ++i) {
    rotation[0].push_back(i);
    rotation[i].push_back(0);
  }
  return build_halin(PlaneTree(std::move(rotation)));
}

namespace {

// One growth move. op 0: leaf in angle `choice` of x. op 1: subdivide the
// edge to x's neighbour choice/2 and hang a leaf on side choice%2. op 2 and 3:
// star or branch gadget in angle `choice` of x.
struct Move {
  int op;
  Vertex x;
  int choice;
};

constexpr int kMoveSize[] = {1, 2, 3, 7};

int choices(const PlaneTree& t, int op, Vertex x) {
  if (op == 1) return 2 * t.degree(x);
  return t.is_leaf(x) ? 0 : (op == 0 ? t.degree(x) + 1 : t.degree(x));
}

// A vertex joined to two centres of K_{1,2}; the only way to add a number of
// vertices that is 1 mod 3 when single leaves keep closing 4-cycles.
StarGadget branch_gadget() {
  std::vector<std::vector<Vertex>> rotation{{1}, {0, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2}, {2}, {3}, {3}};
  return {PlaneTree(std::move(rotation)), 1, 0};
}

PlaneTree apply_move(const PlaneTree& tree, const Move& m, const StarGadget (&gadgets)[2]) {
  auto rotation = tree.rotation();
  const Vertex fresh = tree.size();
  if (m.op == 0) {
    rotation[m.x].insert(rotation[m.x].begin() + m.choice, fresh);
    rotation.push_back({m.x});
  } else if (m.op == 1) {
    const Vertex x = m.x;
    const Vertex y = tree.neighbors(x)[m.choice / 2];
    const Vertex leaf = fresh + 1;
    rotation[x][tree.index_of(x, y)] = fresh;
    rotation[y][tree.index_of(y, x)] = fresh;
    rotation.push_back(m.choice % 2 == 0 ? std::vector<Vertex>{x, leaf, y} : std::vector<Vertex>{x, y, leaf});
    rotation.push_back({fresh});
  } else {
    // Rotate first so the appended gadget lands in the chosen angle.
    std::rotate(rotation[m.x].begin(), rotation[m.x].begin() + m.choice, rotation[m.x].end());
    return attach_star(PlaneTree(std::move(rotation)), m.x, gadgets[m.op - 2]);
  }
  return PlaneTree(std::move(rotation));
}

}  // namespace

HalinGraph random_c4free_halin(int n, std::uint64_t seed) {
  if (n < 16) throw OutOfRange("random generator needs n >= 16, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  // Centre with three branching neighbours (C4-free, 10 vertices) and the
  // three base trees, so every residue mod 3 has a start.
  std::vector<PlaneTree> starts{parse("halin1 ((()())(()())(()()))").tree()};
  for (BaseTreeId id : {BaseTreeId::T16, BaseTreeId::T17, BaseTreeId::T18}) {
    PlaneTree t = base_tree(id).tree;
    if (t.size() <= n) starts.push_back(std::move(t));
  }
  const StarGadget gadgets[2] = {star_gadget(), branch_gadget()};
  constexpr int kRestarts = 64;
  constexpr int kBlindTries = 64;
  for (int restart = 0; restart < kRestarts; ++restart) {
    PlaneTree tree = starts[pick(rng, starts.size())];
    while (tree.size() < n) {
      const int room = n - tree.size();
      std::optional<PlaneTree> next;
      // Cheap random proposals first; near the target, or when they keep
      // failing, list every fitting move and draw among the valid ones.
      for (int t = 0; room >= kMoveSize[3] && t < kBlindTries && !next; ++t) {
        const int op = static_cast<int>(pick(rng, 4));
        const Vertex x = static_cast<Vertex>(pick(rng, tree.size()));
        const int c = choices(tree, op, x);
        if (c == 0) continue;
        PlaneTree candidate = apply_move(tree, {op, x, static_cast<int>(pick(rng, c))}, gadgets);
        if (!contains_cycle(build_halin(candidate), 4)) next = std::move(candidate);
      }
      if (!next) {
        std::vector<PlaneTree> valid;
        for (int op = 0; op < 4; ++op) {
          if (kMoveSize[op] > room) continue;
          for (Vertex x = 0; x < tree.size(); ++x) {
            for (int c = 0; c < choices(tree, op, x); ++c) {
              PlaneTree candidate = apply_move(tree, {op, x, c}, gadgets);
              if (!contains_cycle(build_halin(candidate), 4)) valid.push_back(std::move(candidate));
            }
          }
        }
        if (valid.empty()) break;
        next = std::move(valid[pick(rng, valid.size())]);
      }
      tree = std::move(*next);
    }
    if (tree.size() == n) return build_halin(std::move(tree));
  }
  throw GenerationFailed("no C4-free growth to " + std::to_string(n) + " vertices after " +
                         std::to_string(kRestarts) + " restarts (seed " + std::to_string(seed) + ")");
}

}  // namespace halin
