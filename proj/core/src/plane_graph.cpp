#include "canvas_forge/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace canvas_forge {

// --- SubgraphRef ------------------------------------------------------------

SubgraphRef SubgraphRef::empty(const PlaneGraph& g) {
  return SubgraphRef(g.num_vertices(), g.num_edges());
}

SubgraphRef SubgraphRef::whole(const PlaneGraph& g) {
  SubgraphRef s(g.num_vertices(), g.num_edges());
  s.vertices_.assign(s.vertices_.size(), true);
  s.edges_.assign(s.edges_.size(), true);
  return s;
}

SubgraphRef SubgraphRef::induced(const PlaneGraph& g, std::span<const Vertex> vertices) {
  SubgraphRef s = empty(g);
  for (Vertex v : vertices) s.add_vertex(v);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    if (s.has_vertex(a) && s.has_vertex(b)) s.edges_[static_cast<std::size_t>(e)] = true;
  }
  return s;
}

SubgraphRef SubgraphRef::from_edges(const PlaneGraph& g, std::span<const EdgeId> edges,
                                    std::span<const Vertex> extra_vertices) {
  SubgraphRef s = empty(g);
  for (EdgeId e : edges) s.add_edge(g, e);
  for (Vertex v : extra_vertices) s.add_vertex(v);
  return s;
}

void SubgraphRef::add_edge(const PlaneGraph& g, EdgeId e) {
  auto [a, b] = g.ends(e);
  add_vertex(a);
  add_vertex(b);
  edges_[static_cast<std::size_t>(e)] = true;
}

void SubgraphRef::remove_vertex(const PlaneGraph& g, Vertex v) {
  vertices_[static_cast<std::size_t>(v)] = false;
  for (Dart d : g.darts_at(v)) edges_[static_cast<std::size_t>(PlaneGraph::edge_of(d))] = false;
}

int SubgraphRef::vertex_count() const {
  return static_cast<int>(std::count(vertices_.begin(), vertices_.end(), true));
}

int SubgraphRef::edge_count() const {
  return static_cast<int>(std::count(edges_.begin(), edges_.end(), true));
}

std::vector<Vertex> SubgraphRef::vertices() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<EdgeId> SubgraphRef::edges() const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e]) out.push_back(static_cast<EdgeId>(e));
  return out;
}

bool SubgraphRef::is_subgraph_of(const SubgraphRef& other) const {
  if (vertices_.size() != other.vertices_.size() || edges_.size() != other.edges_.size())
    return false;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] && !other.vertices_[v]) return false;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e] && !other.edges_[e]) return false;
  return true;
}

bool SubgraphRef::valid(const PlaneGraph& g) const {
  if (host_vertex_count() != g.num_vertices() || host_edge_count() != g.num_edges()) return false;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!has_edge(e)) continue;
    auto [a, b] = g.ends(e);
    if (!has_vertex(a) || !has_vertex(b)) return false;
  }
  return true;
}

SubgraphRef SubgraphRef::intersect(const SubgraphRef& other) const {
  SubgraphRef s(host_vertex_count(), host_edge_count());
  for (std::size_t v = 0; v < vertices_.size(); ++v) s.vertices_[v] = vertices_[v] && other.vertices_[v];
  for (std::size_t e = 0; e < edges_.size(); ++e) s.edges_[e] = edges_[e] && other.edges_[e];
  return s;
}

SubgraphRef SubgraphRef::unite(const SubgraphRef& other) const {
  SubgraphRef s(host_vertex_count(), host_edge_count());
  for (std::size_t v = 0; v < vertices_.size(); ++v) s.vertices_[v] = vertices_[v] || other.vertices_[v];
  for (std::size_t e = 0; e < edges_.size(); ++e) s.edges_[e] = edges_[e] || other.edges_[e];
  return s;
}

// --- PlaneGraph construction ------------------------------------------------

PlaneGraph PlaneGraph::build(const std::vector<std::vector<Vertex>>& rotation) {
  PlaneGraph g;
  const int n = static_cast<int>(rotation.size());
  g.num_vertices_ = n;

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    const auto& nbrs = rotation[static_cast<std::size_t>(u)];
    std::vector<Vertex> sorted = nbrs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw EmbeddingError("vertex " + std::to_string(u) + " lists a neighbour twice (multi-edge)");
    for (Vertex w : nbrs) {
      if (w < 0 || w >= n)
        throw EmbeddingError("vertex " + std::to_string(u) + " has out-of-range neighbour " +
                             std::to_string(w));
      if (w == u) throw EmbeddingError("loop at vertex " + std::to_string(u));
      const auto& back = rotation[static_cast<std::size_t>(w)];
      if (std::find(back.begin(), back.end(), u) == back.end())
        throw EmbeddingError("rotation is not symmetric: " + std::to_string(u) + "->" +
                             std::to_string(w) + " has no twin");
      if (u < w) edges.emplace_back(u, w);
    }
  }
  std::sort(edges.begin(), edges.end());
  g.edge_ends_ = edges;

  const std::size_t m = edges.size();
  g.dart_tail_.resize(2 * m);
  g.rot_next_.resize(2 * m);
  g.rot_prev_.resize(2 * m);
  g.darts_at_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t e = 0; e < m; ++e) {
    g.dart_tail_[2 * e] = edges[e].first;
    g.dart_tail_[2 * e + 1] = edges[e].second;
  }
  auto dart_for = [&](Vertex u, Vertex w) {
    auto key = std::minmax(u, w);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair<Vertex, Vertex>(key.first, key.second));
    Dart base = static_cast<Dart>(2 * (it - edges.begin()));
    return u < w ? base : base + 1;
  };
  for (Vertex u = 0; u < n; ++u) {
    auto& ds = g.darts_at_[static_cast<std::size_t>(u)];
    for (Vertex w : rotation[static_cast<std::size_t>(u)]) ds.push_back(dart_for(u, w));
    const std::size_t k = ds.size();
    for (std::size_t i = 0; i < k; ++i) {
      g.rot_next_[static_cast<std::size_t>(ds[i])] = ds[(i + 1) % k];
      g.rot_prev_[static_cast<std::size_t>(ds[i])] = ds[(i + k - 1) % k];
    }
  }
  g.compute_faces();
  return g;
}

void PlaneGraph::compute_faces() {
  faces_.clear();
  dart_face_.assign(static_cast<std::size_t>(num_darts()), -1);
  for (Dart start = 0; start < num_darts(); ++start) {
    if (dart_face_[static_cast<std::size_t>(start)] != -1) continue;
    Face f;
    f.id = static_cast<FaceId>(faces_.size());
    Dart d = start;
    do {
      dart_face_[static_cast<std::size_t>(d)] = f.id;
      f.boundary_walk.push_back(d);
      f.vertices.push_back(tail(d));
      f.edges.push_back(edge_of(d));
      d = face_next(d);
    } while (d != start);
    std::sort(f.vertices.begin(), f.vertices.end());
    f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
    std::sort(f.edges.begin(), f.edges.end());
    f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());
    faces_.push_back(std::move(f));
  }
  for (Vertex v = 0; v < num_vertices_; ++v) {
    if (degree(v) != 0) continue;
    Face f;
    f.id = static_cast<FaceId>(faces_.size());
    f.vertices.push_back(v);
    faces_.push_back(std::move(f));
  }

  // Euler's formula must hold on every component.
  std::vector<int> comp = component_labels(*this);
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<long> chi(static_cast<std::size_t>(ncomp), 0);
  for (Vertex v = 0; v < num_vertices_; ++v) chi[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] += 1;
  for (const auto& [a, b] : edge_ends_) chi[static_cast<std::size_t>(comp[static_cast<std::size_t>(a)])] -= 1;
  for (const Face& f : faces_) chi[static_cast<std::size_t>(comp[static_cast<std::size_t>(f.vertices.front())])] += 1;
  for (int c = 0; c < ncomp; ++c) {
    if (chi[static_cast<std::size_t>(c)] != 2)
      throw EmbeddingError("rotation system is not planar (Euler characteristic " +
                           std::to_string(chi[static_cast<std::size_t>(c)]) + " on a component)");
  }
  outer_face_ = faces_.empty() ? -1 : 0;
}

PlaneGraph PlaneGraph::from_rotation(const std::vector<std::vector<Vertex>>& rotation,
                                     std::span<const Vertex> outer_walk) {
  PlaneGraph g = build(rotation);
  if (outer_walk.empty()) return g;
  for (const Face& f : g.faces_) {
    std::vector<Vertex> walk = g.face_vertex_walk(f.id);
    if (walk.size() != outer_walk.size()) continue;
    for (std::size_t shift = 0; shift < walk.size(); ++shift) {
      bool match = true;
      for (std::size_t i = 0; i < walk.size() && match; ++i)
        match = walk[(i + shift) % walk.size()] == outer_walk[i];
      if (match) {
        g.outer_face_ = f.id;
        return g;
      }
    }
  }
  throw EmbeddingError("outer_face walk does not match any face of the rotation system");
}

PlaneGraph PlaneGraph::from_rotation_with_outer_dart(const std::vector<std::vector<Vertex>>& rotation,
                                                     Vertex tail, Vertex head) {
  PlaneGraph g = build(rotation);
  auto d = g.find_dart(tail, head);
  if (!d) throw EmbeddingError("outer dart " + std::to_string(tail) + "->" + std::to_string(head) + " is not an edge");
  g.outer_face_ = g.face_of(*d);
  return g;
}

std::vector<Vertex> PlaneGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(darts_at(v).size());
  for (Dart d : darts_at(v)) out.push_back(head(d));
  return out;
}

std::optional<Dart> PlaneGraph::find_dart(Vertex tail_v, Vertex head_v) const {
  if (tail_v < 0 || tail_v >= num_vertices_ || head_v < 0 || head_v >= num_vertices_) return std::nullopt;
  for (Dart d : darts_at(tail_v))
    if (head(d) == head_v) return d;
  return std::nullopt;
}

std::optional<EdgeId> PlaneGraph::find_edge(Vertex u, Vertex v) const {
  auto d = find_dart(u, v);
  if (!d) return std::nullopt;
  return edge_of(*d);
}

std::vector<Vertex> PlaneGraph::face_vertex_walk(FaceId f) const {
  const Face& face = faces_[static_cast<std::size_t>(f)];
  if (face.boundary_walk.empty()) return face.vertices;
  std::vector<Vertex> walk;
  walk.reserve(face.boundary_walk.size());
  for (Dart d : face.boundary_walk) walk.push_back(tail(d));
  return walk;
}

bool PlaneGraph::on_outer_face(Vertex v) const {
  const auto& vs = faces_[static_cast<std::size_t>(outer_face_)].vertices;
  return std::binary_search(vs.begin(), vs.end(), v);
}

PlaneGraph PlaneGraph::with_outer_face(FaceId f) const {
  if (f < 0 || f >= num_faces()) throw ArgumentError("face id out of range");
  PlaneGraph g = *this;
  g.outer_face_ = f;
  return g;
}

std::vector<std::vector<Vertex>> PlaneGraph::rotation() const {
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(num_vertices_));
  for (Vertex v = 0; v < num_vertices_; ++v) rot[static_cast<std::size_t>(v)] = neighbors(v);
  return rot;
}

// --- Traversal helpers ------------------------------------------------------

const std::vector<Face>& faces(const PlaneGraph& g) { return g.faces(); }

std::vector<int> bfs_distances(const PlaneGraph& g, std::span<const Vertex> sources,
                               const SubgraphRef* within) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (within && !within->has_vertex(s)) continue;
    if (dist[static_cast<std::size_t>(s)] == 0) continue;
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Dart d : g.darts_at(v)) {
      if (within && !within->has_edge(PlaneGraph::edge_of(d))) continue;
      Vertex w = g.head(d);
      if (dist[static_cast<std::size_t>(w)] != kUnreachable) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

int distance(const PlaneGraph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.empty() || b.empty()) throw ArgumentError("distance: vertex sets must be nonempty");
  auto dist = bfs_distances(g, a);
  int best = kUnreachable;
  for (Vertex v : b) best = std::min(best, dist[static_cast<std::size_t>(v)]);
  return best;
}

std::vector<int> component_labels(const PlaneGraph& g, const SubgraphRef* within) {
  std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    if (within && !within->has_vertex(s)) continue;
    std::vector<Vertex> stack{s};
    label[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Dart d : g.darts_at(v)) {
        if (within && !within->has_edge(PlaneGraph::edge_of(d))) continue;
        Vertex w = g.head(d);
        if (label[static_cast<std::size_t>(w)] != -1) continue;
        label[static_cast<std::size_t>(w)] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const PlaneGraph& g) {
  auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](int c) { return c == 0; });
}

bool is_connected(const PlaneGraph& g, const SubgraphRef& sub) {
  auto labels = component_labels(g, &sub);
  return std::all_of(labels.begin(), labels.end(), [](int c) { return c <= 0; });
}

std::vector<EdgeId> chords_of_face(const PlaneGraph& g, const Face& f) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (std::binary_search(f.edges.begin(), f.edges.end(), e)) continue;
    auto [a, b] = g.ends(e);
    if (std::binary_search(f.vertices.begin(), f.vertices.end(), a) &&
        std::binary_search(f.vertices.begin(), f.vertices.end(), b))
      out.push_back(e);
  }
  return out;
}

namespace {

// Host faces lying in the face of `sub` that contains the host outer face.
std::vector<bool> outer_region_faces(const PlaneGraph& g, const SubgraphRef& sub) {
  std::vector<bool> reached(static_cast<std::size_t>(g.num_faces()), false);
  if (g.outer_face() < 0) return reached;
  std::deque<FaceId> queue{g.outer_face()};
  reached[static_cast<std::size_t>(g.outer_face())] = true;
  while (!queue.empty()) {
    FaceId f = queue.front();
    queue.pop_front();
    for (Dart d : g.face(f).boundary_walk) {
      if (sub.has_edge(PlaneGraph::edge_of(d))) continue;
      FaceId other = g.face_of(PlaneGraph::twin(d));
      if (reached[static_cast<std::size_t>(other)]) continue;
      reached[static_cast<std::size_t>(other)] = true;
      queue.push_back(other);
    }
  }
  return reached;
}

}  // namespace

Dart outer_dart_of(const PlaneGraph& g, const SubgraphRef& sub) {
  auto reached = outer_region_faces(g, sub);
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    if (!reached[static_cast<std::size_t>(f)]) continue;
    for (Dart d : g.face(f).boundary_walk)
      if (sub.has_edge(PlaneGraph::edge_of(d))) return d;
  }
  return kNoDart;
}

Dart sub_face_next(const PlaneGraph& g, const SubgraphRef& sub, Dart d) {
  Dart x = g.rot_next(PlaneGraph::twin(d));
  while (!sub.has_edge(PlaneGraph::edge_of(x))) x = g.rot_next(x);
  return x;
}

std::vector<Dart> sub_face_walk(const PlaneGraph& g, const SubgraphRef& sub, Dart d) {
  std::vector<Dart> walk;
  Dart x = d;
  do {
    walk.push_back(x);
    x = sub_face_next(g, sub, x);
  } while (x != d);
  return walk;
}

std::vector<Vertex> sub_outer_vertices(const PlaneGraph& g, const SubgraphRef& sub) {
  auto reached = outer_region_faces(g, sub);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!sub.has_vertex(v)) continue;
    bool on = false;
    if (g.degree(v) == 0) {
      for (const Face& f : g.faces())
        if (f.boundary_walk.empty() && f.vertices.front() == v) on = reached[static_cast<std::size_t>(f.id)];
    }
    // Every face incident to v is the face of some dart into v.
    for (Dart d : g.darts_at(v))
      if (reached[static_cast<std::size_t>(g.face_of(PlaneGraph::twin(d)))]) on = true;
    if (on) out.push_back(v);
  }
  return out;
}

EmbeddedSubgraph embed_subgraph(const PlaneGraph& g, const SubgraphRef& sub) {
  EmbeddedSubgraph out;
  out.from_host.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!sub.has_vertex(v)) continue;
    out.from_host[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_host.size());
    out.to_host.push_back(v);
  }
  std::vector<std::vector<Vertex>> rot(out.to_host.size());
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    for (Dart d : g.darts_at(out.to_host[i]))
      if (sub.has_edge(PlaneGraph::edge_of(d))) rot[i].push_back(out.from_host[static_cast<std::size_t>(g.head(d))]);
  }
  Dart od = outer_dart_of(g, sub);
  if (od == kNoDart) {
    out.graph = PlaneGraph::from_rotation(rot);
  } else {
    out.graph = PlaneGraph::from_rotation_with_outer_dart(rot, out.from_host[static_cast<std::size_t>(g.tail(od))],
                                                          out.from_host[static_cast<std::size_t>(g.head(od))]);
  }
  out.edge_to_host.resize(static_cast<std::size_t>(out.graph.num_edges()));
  for (EdgeId e = 0; e < out.graph.num_edges(); ++e) {
    auto [a, b] = out.graph.ends(e);
    out.edge_to_host[static_cast<std::size_t>(e)] =
        *g.find_edge(out.to_host[static_cast<std::size_t>(a)], out.to_host[static_cast<std::size_t>(b)]);
  }
  return out;
}

std::optional<EdgeSplit> split_along_edge(const PlaneGraph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) throw ArgumentError("split_along_edge: edge out of range");
  auto [u, v] = g.ends(e);
  SubgraphRef rest = SubgraphRef::whole(g);
  rest.remove_vertex(g, u);
  rest.remove_vertex(g, v);
  auto labels = component_labels(g, &rest);
  int ncomp = 0;
  for (int c : labels) ncomp = std::max(ncomp, c + 1);
  if (ncomp < 2) return std::nullopt;

  // The component of the smallest vertex off e forms part 1.
  std::vector<Vertex> side1{u, v}, side2{u, v};
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    int c = labels[static_cast<std::size_t>(w)];
    if (c < 0) continue;
    (c == 0 ? side1 : side2).push_back(w);
  }
  EdgeSplit split;
  split.part1 = SubgraphRef::induced(g, side1);
  split.part2 = SubgraphRef::induced(g, side2);
  split.g1 = embed_subgraph(g, split.part1);
  split.g2 = embed_subgraph(g, split.part2);
  return split;
}

std::string to_dot(const PlaneGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) os << "  " << v << ";\n";
  std::vector<bool> outer(static_cast<std::size_t>(g.num_edges()), false);
  if (g.outer_face() >= 0)
    for (EdgeId e : g.face(g.outer_face()).edges) outer[static_cast<std::size_t>(e)] = true;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    os << "  " << a << " -- " << b;
    if (outer[static_cast<std::size_t>(e)]) os << " [style=bold]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

// --- Named shapes -----------------------------------------------------------

namespace shapes {

namespace {
PlaneGraph with_largest_outer(PlaneGraph g) {
  FaceId best = 0;
  for (const Face& f : g.faces())
    if (f.boundary_walk.size() > g.face(best).boundary_walk.size()) best = f.id;
  return g.with_outer_face(best);
}
}  // namespace

PlaneGraph single_vertex() { return PlaneGraph::from_rotation({{}}); }

PlaneGraph path(int n) {
  if (n < 1) throw ArgumentError("path needs at least one vertex");
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n) rot[static_cast<std::size_t>(i)].push_back(i + 1);
    if (i > 0) rot[static_cast<std::size_t>(i)].push_back(i - 1);
  }
  return PlaneGraph::from_rotation(rot);
}

PlaneGraph cycle(int n) {
  if (n < 3) throw ArgumentError("cycle needs at least three vertices");
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  std::vector<Vertex> walk(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = {(i + 1) % n, (i + n - 1) % n};
    walk[static_cast<std::size_t>(i)] = i;
  }
  return PlaneGraph::from_rotation(rot, walk);
}

PlaneGraph wheel(int rim) {
  if (rim < 3) throw ArgumentError("wheel needs a rim of at least three vertices");
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(rim + 1));
  std::vector<Vertex> walk(static_cast<std::size_t>(rim));
  for (int i = 0; i < rim; ++i) {
    rot[static_cast<std::size_t>(i)] = {(i + 1) % rim, rim, (i + rim - 1) % rim};
    rot[static_cast<std::size_t>(rim)].push_back(i);
    walk[static_cast<std::size_t>(i)] = i;
  }
  return PlaneGraph::from_rotation(rot, walk);
}

PlaneGraph k4() { return wheel(3); }

PlaneGraph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ArgumentError("grid needs positive dimensions");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(rows * cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      auto& nb = rot[static_cast<std::size_t>(id(r, c))];
      if (c + 1 < cols) nb.push_back(id(r, c + 1));
      if (r + 1 < rows) nb.push_back(id(r + 1, c));
      if (c > 0) nb.push_back(id(r, c - 1));
      if (r > 0) nb.push_back(id(r - 1, c));
    }
  }
  return with_largest_outer(PlaneGraph::from_rotation(rot));
}

PlaneGraph ladder(int rungs) {
  if (rungs < 1) throw ArgumentError("ladder needs at least one rung");
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(2 * rungs));
  for (int i = 0; i < rungs; ++i) {
    auto& bottom = rot[static_cast<std::size_t>(2 * i)];
    auto& top = rot[static_cast<std::size_t>(2 * i + 1)];
    if (i + 1 < rungs) bottom.push_back(2 * (i + 1));
    bottom.push_back(2 * i + 1);
    if (i > 0) bottom.push_back(2 * (i - 1));
    if (i + 1 < rungs) top.push_back(2 * (i + 1) + 1);
    if (i > 0) top.push_back(2 * (i - 1) + 1);
    top.push_back(2 * i);
  }
  return with_largest_outer(PlaneGraph::from_rotation(rot));
}

PlaneGraph star(int leaves) {
  if (leaves < 1) throw ArgumentError("star needs at least one leaf");
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(leaves + 1));
  for (int i = 1; i <= leaves; ++i) {
    rot[0].push_back(i);
    rot[static_cast<std::size_t>(i)] = {0};
  }
  return PlaneGraph::from_rotation(rot);
}

}  // namespace shapes

}  // namespace canvas_forge
