#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace canvas_forge {

using Vertex = int;
using EdgeId = int;
using Dart = int;
using FaceId = int;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();
inline constexpr Dart kNoDart = -1;

/// Raised when a rotation system does not describe a simple plane graph.
class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on violated preconditions of public operations.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A face of a plane graph. Isolated vertices own a face with an empty walk.
struct Face {
  FaceId id = -1;
  std::vector<Dart> boundary_walk;
  std::vector<Vertex> vertices;  // sorted, distinct
  std::vector<EdgeId> edges;     // sorted, distinct
};

class PlaneGraph;

/// Vertex and edge masks over a host graph. Every masked edge has both ends masked.
class SubgraphRef {
 public:
  SubgraphRef() = default;
  SubgraphRef(int num_vertices, int num_edges)
      : vertices_(static_cast<std::size_t>(num_vertices), false),
        edges_(static_cast<std::size_t>(num_edges), false) {}

  static SubgraphRef empty(const PlaneGraph& g);
  static SubgraphRef whole(const PlaneGraph& g);
  static SubgraphRef induced(const PlaneGraph& g, std::span<const Vertex> vertices);
  /// Vertices plus the listed edges (ends added automatically).
  static SubgraphRef from_edges(const PlaneGraph& g, std::span<const EdgeId> edges,
                                std::span<const Vertex> extra_vertices = {});

  void add_vertex(Vertex v) { vertices_[static_cast<std::size_t>(v)] = true; }
  void add_edge(const PlaneGraph& g, EdgeId e);
  void remove_edge(EdgeId e) { edges_[static_cast<std::size_t>(e)] = false; }
  /// Removes v together with its incident edges.
  void remove_vertex(const PlaneGraph& g, Vertex v);

  bool has_vertex(Vertex v) const { return vertices_[static_cast<std::size_t>(v)]; }
  bool has_edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  int vertex_count() const;
  int edge_count() const;
  std::vector<Vertex> vertices() const;
  std::vector<EdgeId> edges() const;
  int host_vertex_count() const { return static_cast<int>(vertices_.size()); }
  int host_edge_count() const { return static_cast<int>(edges_.size()); }

  bool is_subgraph_of(const SubgraphRef& other) const;
  bool valid(const PlaneGraph& g) const;
  SubgraphRef intersect(const SubgraphRef& other) const;
  SubgraphRef unite(const SubgraphRef& other) const;

  friend bool operator==(const SubgraphRef&, const SubgraphRef&) = default;

 private:
  std::vector<bool> vertices_;
  std::vector<bool> edges_;
};

/// A simple plane graph stored as a rotation system (combinatorial map).
///
/// Edge `e` owns darts `2e` (low end to high end) and `2e + 1`. Rotation order
/// at each vertex is the cyclic order of its outgoing darts; face traversal is
/// `face_next(d) = rot_next(twin(d))`. Instances are immutable and safe to
/// share across threads.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Builds from cyclic neighbour lists. `outer_walk` selects the outer face by
  /// its vertex walk (any cyclic shift); empty selects the face of dart 0.
  static PlaneGraph from_rotation(const std::vector<std::vector<Vertex>>& rotation,
                                  std::span<const Vertex> outer_walk = {});
  /// Builds from cyclic neighbour lists; the outer face is the face of dart tail->head.
  static PlaneGraph from_rotation_with_outer_dart(
      const std::vector<std::vector<Vertex>>& rotation, Vertex tail, Vertex head);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edge_ends_.size()); }
  int num_darts() const { return 2 * num_edges(); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  static constexpr Dart twin(Dart d) { return d ^ 1; }
  static constexpr EdgeId edge_of(Dart d) { return d >> 1; }
  Vertex tail(Dart d) const { return dart_tail_[static_cast<std::size_t>(d)]; }
  Vertex head(Dart d) const { return tail(twin(d)); }
  Dart rot_next(Dart d) const { return rot_next_[static_cast<std::size_t>(d)]; }
  Dart rot_prev(Dart d) const { return rot_prev_[static_cast<std::size_t>(d)]; }
  Dart face_next(Dart d) const { return rot_next(twin(d)); }

  /// Outgoing darts of v in rotation order.
  std::span<const Dart> darts_at(Vertex v) const { return darts_at_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(darts_at(v).size()); }
  std::vector<Vertex> neighbors(Vertex v) const;
  std::pair<Vertex, Vertex> ends(EdgeId e) const { return edge_ends_[static_cast<std::size_t>(e)]; }
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  std::optional<Dart> find_dart(Vertex tail, Vertex head) const;
  bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[static_cast<std::size_t>(f)]; }
  FaceId face_of(Dart d) const { return dart_face_[static_cast<std::size_t>(d)]; }
  FaceId outer_face() const { return outer_face_; }
  /// Vertex sequence of a face walk (tails of its darts).
  std::vector<Vertex> face_vertex_walk(FaceId f) const;
  std::vector<Vertex> outer_walk() const { return face_vertex_walk(outer_face_); }
  bool on_outer_face(Vertex v) const;

  /// Same embedding with a different outer face.
  PlaneGraph with_outer_face(FaceId f) const;
  /// Cyclic neighbour lists (the JSON interchange form).
  std::vector<std::vector<Vertex>> rotation() const;

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.darts_at_ == b.darts_at_ &&
           a.edge_ends_ == b.edge_ends_ && a.outer_face_ == b.outer_face_;
  }

 private:
  static PlaneGraph build(const std::vector<std::vector<Vertex>>& rotation);
  void compute_faces();

  int num_vertices_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edge_ends_;
  std::vector<Vertex> dart_tail_;
  std::vector<Dart> rot_next_;
  std::vector<Dart> rot_prev_;
  std::vector<std::vector<Dart>> darts_at_;
  std::vector<FaceId> dart_face_;
  std::vector<Face> faces_;
  FaceId outer_face_ = -1;
};

// --- Traversal and metric helpers -------------------------------------------

/// All faces of g; `faces()[g.outer_face()]` is the outer one.
const std::vector<Face>& faces(const PlaneGraph& g);

/// Multi-source BFS distances, restricted to `within` when given.
std::vector<int> bfs_distances(const PlaneGraph& g, std::span<const Vertex> sources,
                               const SubgraphRef* within = nullptr);

/// Shortest-path distance between two vertex sets; kUnreachable if disconnected.
int distance(const PlaneGraph& g, std::span<const Vertex> a, std::span<const Vertex> b);

/// Component label per vertex (-1 for vertices outside `within`).
std::vector<int> component_labels(const PlaneGraph& g, const SubgraphRef* within = nullptr);
bool is_connected(const PlaneGraph& g);
bool is_connected(const PlaneGraph& g, const SubgraphRef& sub);

/// Edges outside the face boundary with both ends on it.
std::vector<EdgeId> chords_of_face(const PlaneGraph& g, const Face& f);

/// A subgraph re-embedded as a stand-alone plane graph.
struct EmbeddedSubgraph {
  PlaneGraph graph;
  std::vector<Vertex> to_host;    // local vertex -> host vertex
  std::vector<Vertex> from_host;  // host vertex -> local vertex or -1
  std::vector<EdgeId> edge_to_host;
};

/// Restricts the rotation system to `sub`; the outer face is the face of the
/// subgraph containing the host's outer face.
EmbeddedSubgraph embed_subgraph(const PlaneGraph& g, const SubgraphRef& sub);

/// A dart of `sub` whose face in `sub` contains the host outer face, or kNoDart
/// when `sub` has no edges.
Dart outer_dart_of(const PlaneGraph& g, const SubgraphRef& sub);

/// Next dart of the face walk of `sub` (twin, then next present dart in rotation).
Dart sub_face_next(const PlaneGraph& g, const SubgraphRef& sub, Dart d);

/// Closed dart walk of the face of `sub` that contains dart d.
std::vector<Dart> sub_face_walk(const PlaneGraph& g, const SubgraphRef& sub, Dart d);

/// Vertices on the outer face of `sub` (isolated vertices count as on it).
std::vector<Vertex> sub_outer_vertices(const PlaneGraph& g, const SubgraphRef& sub);

struct EdgeSplit {
  SubgraphRef part1;  // host-level subgraphs; part1 holds the smallest vertex off the edge
  SubgraphRef part2;
  EmbeddedSubgraph g1;
  EmbeddedSubgraph g2;
};

/// Splits g into G1 ∪ G2 with G1 ∩ G2 = e (the edge with its ends) when the ends
/// of e separate g; none otherwise.
std::optional<EdgeSplit> split_along_edge(const PlaneGraph& g, EdgeId e);

/// Graphviz rendering; outer-face edges are drawn bold.
std::string to_dot(const PlaneGraph& g, const std::string& name = "G");

// --- Small named graphs used by tests, examples and campaigns ---------------

namespace shapes {
PlaneGraph single_vertex();
PlaneGraph path(int n);
PlaneGraph cycle(int n);
/// Hub `n` adjacent to rim 0..n-1; the outer face is the rim.
PlaneGraph wheel(int rim);
PlaneGraph k4();
/// rows x cols grid graph; vertex r*cols + c.
PlaneGraph grid(int rows, int cols);
/// Ladder with `rungs` rungs; vertices 2i (bottom) and 2i+1 (top).
PlaneGraph ladder(int rungs);
PlaneGraph star(int leaves);
}  // namespace shapes

}  // namespace canvas_forge
