#include "canvas_forge/sampling.hpp"

#include <algorithm>

namespace canvas_forge {

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

ColorSet random_subset(Rng& rng, int palette, int k) {
  if (k > palette || palette > kMaxColors) throw ArgumentError("subset larger than palette");
  ColorSet out;
  // Floyd's sampling
  for (int j = palette - k; j < palette; ++j) {
    Color t = static_cast<Color>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
    out.insert(out.contains(t) ? j : t);
  }
  return out;
}

namespace {

int pick(Rng& rng, std::initializer_list<std::pair<int, int>> weighted) {
  int total = 0;
  for (auto [value, w] : weighted) total += w;
  int r = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(total)));
  for (auto [value, w] : weighted) {
    if (r < w) return value;
    r -= w;
  }
  return weighted.begin()->first;
}

// Lists for a special path: usually distinct singletons, sometimes larger.
void path_lists(Rng& rng, int palette, const std::vector<Vertex>& path, ListAssignment& lists) {
  if (path.empty()) return;
  const bool singletons = uniform_below(rng, 5) != 0;
  if (singletons) {
    ColorSet pair = random_subset(rng, palette, 2);
    std::vector<Color> cs = pair.to_vector();
    if (uniform_below(rng, 2)) std::swap(cs[0], cs[1]);
    for (std::size_t i = 0; i < path.size(); ++i) lists[path[i]] = ColorSet::single(cs[i]);
    return;
  }
  for (Vertex v : path) lists[v] = random_subset(rng, palette, 1 + static_cast<int>(uniform_below(rng, 3)));
  if (path.size() == 2 && lists[path[0]].size() == 1 && lists[path[0]] == lists[path[1]]) {
    lists[path[1]] = lists[path[1]] | random_subset(rng, palette, 2);
  }
}

int boundary_size(Rng& rng, int palette) { return std::min(palette, pick(rng, {{3, 14}, {4, 4}, {5, 2}})); }
int interior_size(Rng& rng, int palette) { return std::min(palette, pick(rng, {{5, 9}, {6, 1}})); }

}  // namespace

Canvas sample_path_canvas(const PlaneGraph& g, int palette, Rng& rng) {
  if (palette < 5) throw ArgumentError("path-canvas sampling needs a palette of at least 5 colours");
  const int n = g.num_vertices();
  std::vector<Vertex> path;
  const auto& walk = g.face(g.outer_face()).boundary_walk;
  const int size = pick(rng, {{0, 1}, {1, 2}, {2, 7}});
  if (walk.empty()) {
    if (size > 0) path.push_back(0);
  } else if (size > 0) {
    Dart d = walk[uniform_below(rng, walk.size())];
    path.push_back(g.tail(d));
    if (size == 2) path.push_back(g.head(d));
  }
  ListAssignment lists(n);
  path_lists(rng, palette, path, lists);
  for (Vertex v = 0; v < n; ++v) {
    if (std::find(path.begin(), path.end(), v) != path.end()) continue;
    lists[v] = random_subset(rng, palette, g.on_outer_face(v) ? boundary_size(rng, palette) : interior_size(rng, palette));
  }
  return Canvas{g, path_subgraph(g, path), std::move(lists)};
}

FaceInstance sample_restricted_face(const PlaneGraph& g, int palette, Rng& rng) {
  if (palette < 5) throw ArgumentError("restricted-face sampling needs a palette of at least 5 colours");
  FaceInstance out;
  out.face = static_cast<FaceId>(uniform_below(rng, static_cast<std::uint64_t>(g.num_faces())));
  const Face& f = g.face(out.face);
  if (f.boundary_walk.empty() || uniform_below(rng, 4) == 0) {
    out.special_path.push_back(f.vertices[uniform_below(rng, f.vertices.size())]);
  } else {
    Dart d = f.boundary_walk[uniform_below(rng, f.boundary_walk.size())];
    out.special_path = {g.tail(d), g.head(d)};
  }
  out.lists = ListAssignment(g.num_vertices());
  path_lists(rng, palette, out.special_path, out.lists);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (std::find(out.special_path.begin(), out.special_path.end(), v) != out.special_path.end()) continue;
    const bool on_f = std::binary_search(f.vertices.begin(), f.vertices.end(), v);
    out.lists[v] = random_subset(rng, palette, on_f ? boundary_size(rng, palette) : interior_size(rng, palette));
  }
  return out;
}

PlaneGraph random_plane_graph(int n, int extra_edges, Rng& rng) {
  if (n < 1) throw ArgumentError("random_plane_graph needs at least one vertex");
  if (n == 1) return shapes::single_vertex();
  std::vector<std::vector<Vertex>> rot{{1}, {0}};
  PlaneGraph g = PlaneGraph::from_rotation(rot);
  auto insert_after = [](std::vector<Vertex>& list, Vertex anchor, Vertex value) {
    auto it = std::find(list.begin(), list.end(), anchor);
    list.insert(it + 1, value);
  };
  for (int v = 2; v < n; ++v) {
    Dart d = static_cast<Dart>(uniform_below(rng, static_cast<std::uint64_t>(g.num_darts())));
    rot.push_back({g.head(d)});
    insert_after(rot[g.head(d)], g.tail(d), v);
    g = PlaneGraph::from_rotation(rot);
  }
  for (int added = 0, attempts = 0; added < extra_edges && attempts < 20 * (extra_edges + 1); ++attempts) {
    const Face& f = g.face(static_cast<FaceId>(uniform_below(rng, static_cast<std::uint64_t>(g.num_faces()))));
    const auto& walk = f.boundary_walk;
    if (walk.size() < 4) continue;
    Dart d1 = walk[uniform_below(rng, walk.size())];
    Dart d2 = walk[uniform_below(rng, walk.size())];
    Vertex h1 = g.head(d1), h2 = g.head(d2);
    if (h1 == h2 || g.adjacent(h1, h2)) continue;
    insert_after(rot[h1], g.tail(d1), h2);
    insert_after(rot[h2], g.tail(d2), h1);
    g = PlaneGraph::from_rotation(rot);
    ++added;
  }
  // Outer face: a uniformly random face, so that every face type is exercised.
  FaceId outer = static_cast<FaceId>(uniform_below(rng, static_cast<std::uint64_t>(g.num_faces())));
  return g.with_outer_face(outer);
}

}  // namespace canvas_forge
