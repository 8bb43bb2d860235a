#include "halin/reductions.hpp"

#include <algorithm>
#include <queue>

#include "halin/cycles.hpp"
#include "halin/errors.hpp"

namespace halin {

std::string_view to_string(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::LeafRemoval: return "leaf-removal";
    case ReductionRule::Smoothing: return "smoothing";
    case ReductionRule::Contraction: return "contraction";
  }
  return "?";
}

ReductionRule parse_rule(std::string_view name) {
  for (auto r : {ReductionRule::LeafRemoval, ReductionRule::Smoothing, ReductionRule::Contraction}) {
    if (name == to_string(r)) return r;
  }
  throw OutOfRange("unknown reduction rule '" + std::string(name) + "'");
}

int edge_delta(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::LeafRemoval: return 2;
    case ReductionRule::Smoothing: return 3;
    case ReductionRule::Contraction: return 1;
  }
  return 0;
}

namespace {

std::vector<int> tree_distances(const PlaneTree& tree, Vertex source) {
  std::vector<int> dist(tree.size(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : tree.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

// Longest distance from `y` into the part of the tree not containing `from`.
int height_away(const PlaneTree& tree, Vertex y, Vertex from) {
  int best = 0;
  std::vector<std::pair<Vertex, Vertex>> stack{{y, from}};
  std::vector<int> depth(tree.size(), 0);
  while (!stack.empty()) {
    auto [x, parent] = stack.back();
    stack.pop_back();
    best = std::max(best, depth[x]);
    for (Vertex z : tree.neighbors(x)) {
      if (z == parent) continue;
      depth[z] = depth[x] + 1;
      stack.push_back({z, x});
    }
  }
  return best;
}

bool in_range(const HalinGraph& g, Vertex v) { return v >= 0 && v < g.vertex_count(); }

// Deletes the listed vertices (already unlinked from every rotation) and
// renumbers the rest densely, preserving relative order.
PlaneTree compact(std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> removed) {
  std::sort(removed.begin(), removed.end());
  const int n = static_cast<int>(rotation.size());
  std::vector<Vertex> image(n, -1);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!std::binary_search(removed.begin(), removed.end(), v)) image[v] = next++;
  }
  std::vector<std::vector<Vertex>> out(next);
  for (Vertex v = 0; v < n; ++v) {
    if (image[v] < 0) continue;
    for (Vertex u : rotation[v]) out[image[v]].push_back(image[u]);
  }
  return PlaneTree(std::move(out));
}

ReductionStep finish(const HalinGraph& g, ReductionRule rule, std::vector<Vertex> site,
                     PlaneTree tree) {
  ReductionStep step;
  step.rule = rule;
  step.site = std::move(site);
  step.before_edges = g.edge_count();
  step.result = build_halin(std::move(tree));
  step.after_edges = step.result.edge_count();
  const auto report = validate(step.result);
  if (!report.valid()) {
    throw PostconditionFailed(std::string(to_string(rule)) + " produced an invalid Halin graph: " +
                              report.violations.front());
  }
  if (step.before_edges - step.after_edges != edge_delta(rule)) {
    throw PostconditionFailed(std::string(to_string(rule)) + " changed the edge count by " +
                              std::to_string(step.before_edges - step.after_edges));
  }
  if (contains_cycle(step.result, 4)) {
    throw PostconditionFailed(std::string(to_string(rule)) + " introduced a 4-cycle");
  }
  return step;
}

std::optional<std::string> leaf_removal_check(const HalinGraph& g, Vertex v, Vertex u,
                                              bool check_c4) {
  if (!in_range(g, v) || !in_range(g, u)) return "vertex id out of range";
  const PlaneTree& t = g.tree();
  if (classify_vertex(t, v) != VertexClass::SemiBranching) return "v is not semi-branching";
  if (t.degree(v) < 4) return "v has degree < 4";
  if (!t.adjacent(v, u) || !t.is_leaf(u)) return "u is not a leaf neighbour of v";
  if (check_c4 && contains_cycle(g, 4)) return "input contains a 4-cycle";
  // At least one of the two faces at u has size >= 5.
  const auto faces = bounded_faces(g);
  int big = 0;
  for (const auto& f : faces) {
    const bool at_u = f.cycle_edge.u == u || f.cycle_edge.v == u;
    if (at_u && f.size() >= 5) ++big;
  }
  if (big == 0) return "both faces at u are smaller than 5";
  return std::nullopt;
}

std::optional<std::string> smoothing_check(const HalinGraph& g, Vertex u, Vertex v, Vertex w,
                                           bool check_c4) {
  if (!in_range(g, u) || !in_range(g, v) || !in_range(g, w)) return "vertex id out of range";
  const PlaneTree& t = g.tree();
  if (classify_vertex(t, v) != VertexClass::SemiBranching) return "v is not semi-branching";
  if (t.degree(v) != 3) return "v does not have degree 3";
  if (u == w || !t.adjacent(v, u) || !t.adjacent(v, w)) return "(u, v, w) is not a tree path";
  Vertex third = -1;
  for (Vertex x : t.neighbors(v)) {
    if (x != u && x != w) third = x;
  }
  if (!t.is_leaf(third)) {
    return "third neighbour of v is not a leaf (removing v would disconnect the tree)";
  }
  if (check_c4 && contains_cycle(g, 4)) return "input contains a 4-cycle";
  const auto faces = bounded_faces(g);
  const int f = face_of_angle(faces, u, v, w);
  if (f < 0 || faces[f].size() < 6) return "face incident to the path has size < 6";
  return std::nullopt;
}

std::optional<std::string> contraction_check(const HalinGraph& g, Edge e, bool check_c4) {
  if (!in_range(g, e.u) || !in_range(g, e.v)) return "vertex id out of range";
  const PlaneTree& t = g.tree();
  if (!t.adjacent(e.u, e.v)) return "not a tree edge";
  if (t.is_leaf(e.u) || t.is_leaf(e.v)) return "edge has a leaf endpoint";
  if (check_c4 && contains_cycle(g, 4)) return "input contains a 4-cycle";
  const auto faces = bounded_faces(g);
  for (int f : faces_incident_to_tree_edge(faces, e.u, e.v)) {
    if (faces[f].size() < 6) return "an incident face has size < 6";
  }
  return std::nullopt;
}

ReductionStep do_leaf_removal(const HalinGraph& g, Vertex v, Vertex u) {
  auto rotation = g.tree().rotation();
  auto& at_v = rotation[v];
  at_v.erase(std::find(at_v.begin(), at_v.end(), u));
  rotation[u].clear();
  return finish(g, ReductionRule::LeafRemoval, {v, u}, compact(std::move(rotation), {u}));
}

ReductionStep do_smoothing(const HalinGraph& g, Vertex u, Vertex v, Vertex w) {
  const PlaneTree& t = g.tree();
  Vertex leaf = -1;
  for (Vertex x : t.neighbors(v)) {
    if (x != u && x != w) leaf = x;
  }
  auto rotation = t.rotation();
  rotation[u][t.index_of(u, v)] = w;
  rotation[w][t.index_of(w, v)] = u;
  rotation[v].clear();
  rotation[leaf].clear();
  return finish(g, ReductionRule::Smoothing, {u, v, w},
                compact(std::move(rotation), {v, leaf}));
}

ReductionStep do_contraction(const HalinGraph& g, Edge e) {
  const PlaneTree& t = g.tree();
  const Vertex a = e.u;
  const Vertex b = e.v;
  auto rotation = t.rotation();
  // b's neighbours after a, counterclockwise, take b's place around a.
  std::vector<Vertex> spliced;
  for (Vertex x = t.successor(b, a); x != a; x = t.successor(b, x)) spliced.push_back(x);
  auto& at_a = rotation[a];
  const auto pos = at_a.begin() + t.index_of(a, b);
  const auto inserted = at_a.erase(pos);
  at_a.insert(inserted, spliced.begin(), spliced.end());
  for (Vertex x : spliced) rotation[x][t.index_of(x, b)] = a;
  rotation[b].clear();
  return finish(g, ReductionRule::Contraction, {a, b}, compact(std::move(rotation), {b}));
}

std::vector<ReductionSite> sites_of(const HalinGraph& g, ReductionRule rule) {
  std::vector<ReductionSite> out;
  const PlaneTree& t = g.tree();
  const int n = g.vertex_count();
  switch (rule) {
    case ReductionRule::LeafRemoval:
      for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> nb(t.neighbors(v).begin(), t.neighbors(v).end());
        std::sort(nb.begin(), nb.end());
        for (Vertex u : nb) {
          if (!leaf_removal_check(g, v, u, false)) out.push_back({rule, {v, u}});
        }
      }
      break;
    case ReductionRule::Contraction:
      for (const Edge& e : g.edges()) {
        if (!g.is_tree_edge(e.u, e.v)) continue;
        if (!contraction_check(g, e, false)) out.push_back({rule, {e.u, e.v}});
      }
      break;
    case ReductionRule::Smoothing:
      for (Vertex v = 0; v < n; ++v) {
        if (t.degree(v) != 3) continue;
        std::vector<Vertex> nb(t.neighbors(v).begin(), t.neighbors(v).end());
        std::sort(nb.begin(), nb.end());
        for (std::size_t i = 0; i < nb.size(); ++i) {
          for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (!smoothing_check(g, nb[i], v, nb[j], false)) {
              out.push_back({rule, {nb[i], v, nb[j]}});
            }
          }
        }
      }
      break;
  }
  return out;
}

}  // namespace

int tree_diameter(const PlaneTree& tree) {
  if (tree.size() == 0) return 0;
  const auto d0 = tree_distances(tree, 0);
  const Vertex far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  const auto d1 = tree_distances(tree, far);
  return *std::max_element(d1.begin(), d1.end());
}

LongestPathReport longest_path(const HalinGraph& g) {
  const PlaneTree& t = g.tree();
  const int n = t.size();
  LongestPathReport report;
  if (n == 0) return report;
  const int diameter = tree_diameter(t);

  for (Vertex s = 0; s < n && report.path.empty(); ++s) {
    if (!t.is_leaf(s) || height_away(t, s, -1) != diameter) continue;
    report.path.push_back(s);
    Vertex prev = -1;
    Vertex x = s;
    for (int remaining = diameter; remaining > 0; --remaining) {
      std::vector<Vertex> nb(t.neighbors(x).begin(), t.neighbors(x).end());
      std::sort(nb.begin(), nb.end());
      for (Vertex y : nb) {
        if (y == prev) continue;
        if (height_away(t, y, x) == remaining - 1) {
          prev = x;
          x = y;
          break;
        }
      }
      report.path.push_back(x);
    }
  }
  report.length = diameter;
  if (diameter >= 2) report.semi_pendants = {report.path[1], report.path[diameter - 1]};
  return report;
}

std::vector<std::pair<Vertex, Vertex>> diametral_pairs(const PlaneTree& tree) {
  const int n = tree.size();
  std::vector<std::vector<int>> dist;
  int diameter = 0;
  for (Vertex v = 0; v < n; ++v) {
    dist.push_back(tree_distances(tree, v));
    diameter = std::max(diameter, *std::max_element(dist.back().begin(), dist.back().end()));
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (dist[a][b] == diameter) out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<std::string> leaf_removal_blocker(const HalinGraph& g, Vertex v, Vertex u) {
  return leaf_removal_check(g, v, u, true);
}

std::optional<std::string> smoothing_blocker(const HalinGraph& g, Vertex u, Vertex v, Vertex w) {
  return smoothing_check(g, u, v, w, true);
}

std::optional<std::string> contraction_blocker(const HalinGraph& g, Edge e) {
  return contraction_check(g, e, true);
}

ReductionStep leaf_removal(const HalinGraph& g, Vertex v, Vertex u) {
  if (auto why = leaf_removal_blocker(g, v, u)) throw PreconditionFailed("leaf-removal: " + *why);
  return do_leaf_removal(g, v, u);
}

ReductionStep smoothing(const HalinGraph& g, Vertex u, Vertex v, Vertex w) {
  if (auto why = smoothing_blocker(g, u, v, w)) throw PreconditionFailed("smoothing: " + *why);
  return do_smoothing(g, u, v, w);
}

ReductionStep contraction(const HalinGraph& g, Edge e) {
  if (auto why = contraction_blocker(g, e)) throw PreconditionFailed("contraction: " + *why);
  return do_contraction(g, e);
}

ReductionStep apply_reduction(const HalinGraph& g, const ReductionSite& site) {
  const auto& s = site.site;
  const auto need = [&](std::size_t count) {
    if (s.size() != count) {
      throw PreconditionFailed(std::string(to_string(site.rule)) + " site needs " +
                               std::to_string(count) + " vertices");
    }
  };
  switch (site.rule) {
    case ReductionRule::LeafRemoval: need(2); return leaf_removal(g, s[0], s[1]);
    case ReductionRule::Smoothing: need(3); return smoothing(g, s[0], s[1], s[2]);
    case ReductionRule::Contraction: need(2); return contraction(g, Edge{s[0], s[1]});
  }
  throw PreconditionFailed("unknown rule");
}

std::vector<ReductionSite> applicable_sites(const HalinGraph& g, ReductionRule rule) {
  if (contains_cycle(g, 4)) return {};
  return sites_of(g, rule);
}

std::optional<ReductionSite> find_reduction(const HalinGraph& g) {
  if (contains_cycle(g, 4)) return std::nullopt;
  for (auto rule : {ReductionRule::LeafRemoval, ReductionRule::Contraction,
                    ReductionRule::Smoothing}) {
    auto sites = sites_of(g, rule);
    if (!sites.empty()) return sites.front();
  }
  return std::nullopt;
}

}  // namespace halin
