#include "canvas_forge/canvas.hpp"

#include <algorithm>

#include "canvas_forge/color_solver.hpp"

namespace canvas_forge {

namespace {

// Lexicographically least proper colouring of a path of one or two vertices.
std::optional<Coloring> color_short_path(int n, const ListAssignment& lists, std::span<const Vertex> path) {
  Coloring out(n);
  if (path.size() == 1) {
    if (lists[path[0]].empty()) return std::nullopt;
    out.assign(path[0], lists[path[0]].min());
    return out;
  }
  for (Color a : lists[path[0]]) {
    ColorSet rest = lists[path[1]] - ColorSet::single(a);
    if (rest.empty()) continue;
    out.assign(path[0], a);
    out.assign(path[1], rest.min());
    return out;
  }
  return std::nullopt;
}

// Candidate special paths on face f: each vertex, followed by its boundary
// edges towards larger vertices.
template <typename Fn>
std::optional<RestrictionCert> search_face(const PlaneGraph& g, const ListAssignment& lists, FaceId f, Fn&& others_ok) {
  const Face& face = g.face(f);
  auto try_path = [&](std::vector<Vertex> path) -> std::optional<RestrictionCert> {
    if (!others_ok(face, path)) return std::nullopt;
    auto coloring = color_short_path(g.num_vertices(), lists, path);
    if (!coloring) return std::nullopt;
    return RestrictionCert{f, std::move(path), std::move(*coloring), true};
  };
  for (Vertex a : face.vertices) {
    if (auto cert = try_path({a})) return cert;
    std::vector<Vertex> partners;
    for (EdgeId e : face.edges) {
      auto [u, v] = g.ends(e);
      if (u == a && v > a) partners.push_back(v);
      if (v == a && u > a) partners.push_back(u);
    }
    std::sort(partners.begin(), partners.end());
    for (Vertex b : partners)
      if (auto cert = try_path({a, b})) return cert;
  }
  return std::nullopt;
}

bool in_path(const std::vector<Vertex>& path, Vertex v) { return std::find(path.begin(), path.end(), v) != path.end(); }

}  // namespace

std::optional<RestrictionCert> is_restricted_face(const PlaneGraph& g, const ListAssignment& lists, FaceId f) {
  if (f < 0 || f >= g.num_faces()) throw ArgumentError("face id out of range");
  return search_face(g, lists, f, [&](const Face& face, const std::vector<Vertex>& path) {
    for (Vertex v : face.vertices)
      if (!in_path(path, v) && lists[v].size() < 3) return false;
    return true;
  });
}

std::optional<RestrictionCert> is_restricted_set(const PlaneGraph& g, const ListAssignment& lists,
                                                 std::span<const Vertex> x) {
  for (Vertex v : x)
    if (v < 0 || v >= g.num_vertices()) throw ArgumentError("vertex outside the graph");
  auto others_ok = [&](const Face&, const std::vector<Vertex>& path) {
    for (Vertex v : x)
      if (!in_path(path, v) && lists[v].size() < 3) return false;
    return true;
  };
  std::vector<FaceId> containing, rest;
  for (const Face& f : g.faces()) {
    bool all = std::all_of(x.begin(), x.end(),
                           [&](Vertex v) { return std::binary_search(f.vertices.begin(), f.vertices.end(), v); });
    (all ? containing : rest).push_back(f.id);
  }
  for (FaceId f : containing)
    if (auto cert = search_face(g, lists, f, others_ok)) return cert;
  for (FaceId f : rest)
    if (auto cert = search_face(g, lists, f, others_ok)) {
      cert->face_contains_set = false;
      return cert;
    }
  return std::nullopt;
}

std::string to_string(CanvasClause clause) {
  switch (clause) {
    case CanvasClause::kDisconnected: return "disconnected";
    case CanvasClause::kListsMismatch: return "lists-mismatch";
    case CanvasClause::kEmptyList: return "empty-list";
    case CanvasClause::kScaffoldMalformed: return "scaffold-malformed";
    case CanvasClause::kScaffoldOffOuterFace: return "scaffold-off-outer-face";
    case CanvasClause::kInteriorListTooSmall: return "interior-list-too-small";
    case CanvasClause::kListTooSmall: return "list-too-small";
    case CanvasClause::kScaffoldNotColorable: return "scaffold-not-colorable";
  }
  return "unknown";
}

bool CanvasReport::violates(CanvasClause clause) const {
  return std::any_of(violations.begin(), violations.end(), [&](const CanvasViolation& v) { return v.clause == clause; });
}

SubgraphRef path_subgraph(const PlaneGraph& g, std::span<const Vertex> vertices) {
  SubgraphRef s = SubgraphRef::empty(g);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    s.add_vertex(vertices[i]);
    if (i == 0) continue;
    auto e = g.find_edge(vertices[i - 1], vertices[i]);
    if (!e) throw ArgumentError("path vertices " + std::to_string(vertices[i - 1]) + " and " +
                                std::to_string(vertices[i]) + " are not adjacent");
    s.add_edge(g, *e);
  }
  return s;
}

std::optional<std::vector<Vertex>> scaffold_path(const Canvas& c) {
  const PlaneGraph& g = c.graph;
  const SubgraphRef& s = c.scaffold;
  const int k = s.vertex_count();
  if (k == 0) return std::vector<Vertex>{};
  if (s.edge_count() != k - 1 || !is_connected(g, s)) return std::nullopt;
  std::vector<int> sdeg(g.num_vertices(), 0);
  for (EdgeId e : s.edges()) {
    auto [a, b] = g.ends(e);
    ++sdeg[a];
    ++sdeg[b];
  }
  Vertex start = -1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!s.has_vertex(v)) continue;
    if (sdeg[v] > 2) return std::nullopt;
    if (start < 0 && sdeg[v] <= 1) start = v;
  }
  std::vector<Vertex> path{start};
  Vertex prev = -1, cur = start;
  while (static_cast<int>(path.size()) < k) {
    Vertex next = -1;
    for (Dart d : g.darts_at(cur)) {
      Vertex w = g.head(d);
      if (w != prev && s.has_edge(PlaneGraph::edge_of(d))) next = w;
    }
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  if (k <= 2) return path;
  // Longer paths must appear as consecutive darts of the outer walk.
  const auto& walk = g.face(g.outer_face()).boundary_walk;
  const std::size_t len = walk.size();
  auto matches = [&](const std::vector<Vertex>& p) {
    for (std::size_t i = 0; i < len; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j + 1 < p.size() && ok; ++j) {
        Dart d = walk[(i + j) % len];
        ok = g.tail(d) == p[j] && g.head(d) == p[j + 1];
      }
      if (ok) return true;
    }
    return false;
  };
  std::vector<Vertex> reversed(path.rbegin(), path.rend());
  if (matches(path) || matches(reversed)) return path;
  return std::nullopt;
}

CanvasReport validate_canvas(const Canvas& c) {
  CanvasReport report;
  const PlaneGraph& g = c.graph;
  const int n = g.num_vertices();
  auto add = [&](CanvasClause clause, Vertex v, std::string msg) {
    report.violations.push_back({clause, v, std::move(msg)});
  };
  if (c.lists.size() != n) {
    add(CanvasClause::kListsMismatch, -1, "list assignment covers " + std::to_string(c.lists.size()) + " of " +
                                              std::to_string(n) + " vertices");
    return report;
  }
  if (c.scaffold.host_vertex_count() != n || c.scaffold.host_edge_count() != g.num_edges() ||
      !c.scaffold.valid(g)) {
    add(CanvasClause::kScaffoldMalformed, -1, "scaffold does not describe a subgraph of the host");
    return report;
  }
  if (n == 0 || !is_connected(g)) add(CanvasClause::kDisconnected, -1, "graph is not connected");

  const Face& outer = g.face(g.outer_face());
  auto on_outer = [&](Vertex v) { return std::binary_search(outer.vertices.begin(), outer.vertices.end(), v); };
  bool scaffold_lists_ok = true;
  for (Vertex v = 0; v < n; ++v) {
    const int size = c.lists[v].size();
    const bool in_s = c.scaffold.has_vertex(v);
    if (size == 0) {
      add(CanvasClause::kEmptyList, v, "empty list");
      if (in_s) scaffold_lists_ok = false;
    }
    if (in_s && !on_outer(v)) add(CanvasClause::kScaffoldOffOuterFace, v, "scaffold vertex not on the outer face");
    if (!on_outer(v) && size < 5)
      add(CanvasClause::kInteriorListTooSmall, v, "interior vertex has list size " + std::to_string(size));
    if (!in_s && size < 3) add(CanvasClause::kListTooSmall, v, "vertex outside S has list size " + std::to_string(size));
  }
  for (EdgeId e : c.scaffold.edges()) {
    if (!std::binary_search(outer.edges.begin(), outer.edges.end(), e)) {
      auto [a, b] = g.ends(e);
      add(CanvasClause::kScaffoldOffOuterFace, std::min(a, b),
          "scaffold edge " + std::to_string(a) + "-" + std::to_string(b) + " not on the outer face");
    }
  }
  if (scaffold_lists_ok) {
    report.scaffold_coloring = solve_exhaustive(g, c.lists, Coloring(n), &c.scaffold);
    if (!report.scaffold_coloring) add(CanvasClause::kScaffoldNotColorable, -1, "S has no L-colouring");
  } else {
    add(CanvasClause::kScaffoldNotColorable, -1, "S has a vertex with an empty list");
  }
  if (auto path = scaffold_path(c)) {
    report.path_canvas = true;
    report.scaffold_path = std::move(*path);
  }
  return report;
}

MainInstance build_main_instance(const PlaneGraph& g, const ListAssignment& lists,
                                 const std::vector<std::vector<Vertex>>& sets) {
  if (!lists.valid_for(g)) throw ArgumentError("list assignment must give every vertex a nonempty list");
  MainInstance inst{g, lists, sets, {}, {}, kUnreachable};
  std::vector<bool> covered(g.num_vertices(), false);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto cert = is_restricted_set(g, lists, sets[i]);
    if (!cert) throw ArgumentError("set " + std::to_string(i) + " is not restricted");
    inst.certs.push_back(std::move(*cert));
    for (Vertex v : sets[i]) covered[v] = true;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!covered[v] && lists[v].size() < 5)
      throw ArgumentError("vertex " + std::to_string(v) + " outside every set has list size " +
                          std::to_string(lists[v].size()) + " < 5");
  const std::size_t m = sets.size();
  inst.pairwise_distance.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      int d = (sets[i].empty() || sets[j].empty()) ? kUnreachable : distance(g, sets[i], sets[j]);
      inst.pairwise_distance[i][j] = inst.pairwise_distance[j][i] = d;
      inst.min_distance = std::min(inst.min_distance, d);
    }
  }
  return inst;
}

}  // namespace canvas_forge
