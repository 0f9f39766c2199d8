#include "canvas_forge/corpus.hpp"

#include <algorithm>

#include "canvas_forge/color_solver.hpp"
#include "canvas_forge/criticality.hpp"

namespace canvas_forge {

namespace {

int between(Rng& rng, int lo, int hi) { return lo + static_cast<int>(uniform_below(rng, hi - lo + 1)); }

// k consecutive distinct vertices along the outer walk from a random dart.
std::optional<std::vector<Vertex>> outer_path(const PlaneGraph& g, int k, Rng& rng) {
  const auto& walk = g.face(g.outer_face()).boundary_walk;
  if (walk.empty()) {
    if (k == 1 && g.num_vertices() > 0) return std::vector<Vertex>{static_cast<Vertex>(uniform_below(rng, g.num_vertices()))};
    return std::nullopt;
  }
  const std::size_t start = uniform_below(rng, walk.size());
  std::vector<Vertex> out{g.tail(walk[start])};
  for (std::size_t i = 0; static_cast<int>(out.size()) < k && i < walk.size(); ++i) {
    const Vertex v = g.head(walk[(start + i) % walk.size()]);
    if (std::find(out.begin(), out.end(), v) != out.end()) return std::nullopt;
    out.push_back(v);
  }
  if (static_cast<int>(out.size()) < k) return std::nullopt;
  return out;
}

std::optional<Coloring> first_blocking(const PlaneGraph& g, const ListAssignment& lists, const SubgraphRef& t,
                                       int budget) {
  std::optional<Coloring> found;
  int seen = 0;
  for_each_t_coloring(g, lists, t, [&](const Coloring& phi) {
    if (!extends(g, lists, t, phi)) {
      found = phi;
      return false;
    }
    return ++seen < budget;
  });
  return found;
}

}  // namespace

std::optional<CriticalInstance> sample_critical_instance(CriticalKind kind, int n_max, int palette, Rng& rng) {
  if (n_max < 4) throw ArgumentError("critical corpus needs n_max >= 4");
  if (palette < 5 || palette > kMaxColors) throw ArgumentError("critical corpus needs a palette of 5..64 colours");
  const int n = between(rng, 4, n_max);
  PlaneGraph g = random_plane_graph(n, between(rng, 0, 2 * n), rng);
  std::vector<ColorSet> lists(n);
  SubgraphRef t;
  switch (kind) {
    case CriticalKind::kTight: {
      auto path = outer_path(g, between(rng, 1, 3), rng);
      if (!path) return std::nullopt;
      t = path_subgraph(g, *path);
      for (Vertex v = 0; v < n; ++v)
        lists[v] = random_subset(rng, palette, t.has_vertex(v) ? between(rng, 1, 2) : between(rng, 2, 3));
      break;
    }
    case CriticalKind::kPathCanvas3: {
      auto path = outer_path(g, 3, rng);
      if (!path) return std::nullopt;
      t = path_subgraph(g, *path);
      for (Vertex v = 0; v < n; ++v)
        lists[v] = random_subset(rng, palette, t.has_vertex(v) ? 1 : g.on_outer_face(v) ? 3 : 5);
      break;
    }
    case CriticalKind::kFiveList: {
      std::vector<Vertex> ring = g.face(g.outer_face()).vertices;
      if (ring.size() < 3 || ring.size() > 6 || uniform_below(rng, 2) == 0) {
        ring = g.neighbors(static_cast<Vertex>(uniform_below(rng, n)));
        std::sort(ring.begin(), ring.end());
      }
      if (ring.empty()) return std::nullopt;
      t = SubgraphRef::induced(g, ring);
      for (Vertex v = 0; v < n; ++v) lists[v] = random_subset(rng, palette, 5);
      break;
    }
  }
  CriticalInstance out{g, ListAssignment(std::move(lists)), t, {}, {}};
  auto phi = first_blocking(out.host, out.lists, out.t, 5000);
  if (!phi) return std::nullopt;
  out.phi = *phi;
  out.critical = extract_critical(out.host, out.lists, out.t, out.phi);
  return out;
}

std::optional<CriticalInstance> draw_critical_instance(CriticalKind kind, int n_max, int palette, Rng& rng,
                                                       int attempts) {
  for (int i = 0; i < attempts; ++i)
    if (auto inst = sample_critical_instance(kind, n_max, palette, rng)) return inst;
  return std::nullopt;
}

Canvas critical_canvas(const CriticalInstance& inst) {
  EmbeddedSubgraph es = embed_subgraph(inst.host, inst.critical);
  std::vector<ColorSet> lists;
  for (Vertex h : es.to_host) lists.push_back(inst.lists[h]);
  SubgraphRef s = SubgraphRef::empty(es.graph);
  for (Vertex v : inst.t.vertices()) s.add_vertex(es.from_host[v]);
  for (EdgeId e : inst.t.edges()) {
    auto [a, b] = inst.host.ends(e);
    s.add_edge(es.graph, *es.graph.find_edge(es.from_host[a], es.from_host[b]));
  }
  return Canvas{es.graph, s, ListAssignment(std::move(lists))};
}

SubgraphRef sample_intermediate(const CriticalInstance& inst, Rng& rng) {
  const PlaneGraph& g = inst.host;
  SubgraphRef out = inst.t;
  std::vector<EdgeId> extra_edges;
  std::vector<Vertex> extra_vertices;
  for (Vertex v : inst.critical.vertices())
    if (!inst.t.has_vertex(v)) {
      extra_vertices.push_back(v);
      if (uniform_below(rng, 2)) out.add_vertex(v);
    }
  for (EdgeId e : inst.critical.edges())
    if (!inst.t.has_edge(e)) {
      extra_edges.push_back(e);
      if (uniform_below(rng, 2)) out.add_edge(g, e);
    }
  if (out == inst.critical) {
    if (!extra_edges.empty()) out.remove_edge(extra_edges[uniform_below(rng, extra_edges.size())]);
    else out.remove_vertex(g, extra_vertices[uniform_below(rng, extra_vertices.size())]);
  }
  return out;
}

std::optional<MainInstance> sample_face_instance(int m, int min_distance, int palette, Rng& rng) {
  if (m < 1) throw ArgumentError("need at least one face");
  if (min_distance < 1) throw ArgumentError("faces must be at distance >= 1");
  if (palette < 5 || palette > kMaxColors) throw ArgumentError("face instances need a palette of 5..64 colours");
  for (int attempt = 0; attempt < 30; ++attempt) {
    PlaneGraph g;
    switch (uniform_below(rng, 3)) {
      case 0: g = shapes::grid(between(rng, 3, 5), between(rng, 4, 9)); break;
      case 1: g = shapes::ladder(between(rng, 4, 12)); break;
      default: {
        const int n = between(rng, 8, 16);
        g = random_plane_graph(n, between(rng, 0, 2 * n), rng);
      }
    }
    std::vector<FaceId> order(g.num_faces());
    for (FaceId f = 0; f < g.num_faces(); ++f) order[f] = f;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
    std::vector<FaceId> chosen;
    for (FaceId f : order) {
      const auto& vs = g.face(f).vertices;
      if (g.face(f).boundary_walk.empty()) continue;
      bool far = std::all_of(chosen.begin(), chosen.end(),
                             [&](FaceId c) { return distance(g, vs, g.face(c).vertices) >= min_distance; });
      if (far) chosen.push_back(f);
      if (static_cast<int>(chosen.size()) == m) break;
    }
    if (static_cast<int>(chosen.size()) < m) continue;

    std::vector<ColorSet> lists(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) lists[v] = random_subset(rng, palette, 5);
    std::vector<std::vector<Vertex>> sets;
    for (FaceId f : chosen) {
      const Face& face = g.face(f);
      for (Vertex v : face.vertices) lists[v] = random_subset(rng, palette, 3);
      if (uniform_below(rng, 3) == 0) {
        const EdgeId e = face.edges[uniform_below(rng, face.edges.size())];
        auto [a, b] = g.ends(e);
        const Color ca = static_cast<Color>(uniform_below(rng, palette));
        const Color cb = static_cast<Color>((ca + 1 + uniform_below(rng, palette - 1)) % palette);
        lists[a] = ColorSet::single(ca);
        lists[b] = ColorSet::single(cb);
      } else {
        lists[face.vertices[uniform_below(rng, face.vertices.size())]] =
            ColorSet::single(static_cast<Color>(uniform_below(rng, palette)));
      }
      sets.push_back(face.vertices);
    }
    try {
      return build_main_instance(g, ListAssignment(std::move(lists)), sets);
    } catch (const ArgumentError&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace canvas_forge
