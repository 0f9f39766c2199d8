#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "canvas_forge/coloring.hpp"
#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge {

/// A colourable path of at most two vertices certifying a restricted face or set.
struct RestrictionCert {
  FaceId face_id = -1;
  std::vector<Vertex> special_path;  // one vertex, or the two ends of an edge (ascending)
  Coloring path_coloring;            // lexicographically least colouring of the path
  bool face_contains_set = true;     // set variant: X lies on the boundary of face_id
};

/// Certificate for face f, or none. Candidate paths are tried in lexicographic
/// order of their (ascending) vertex sequence, so a vertex precedes its edges.
std::optional<RestrictionCert> is_restricted_face(const PlaneGraph& g, const ListAssignment& lists, FaceId f);

/// Set variant: |L(v)| >= 3 on X minus the path, and the path lies on some face.
/// Faces whose boundary contains X are searched first, then the rest, by id.
std::optional<RestrictionCert> is_restricted_set(const PlaneGraph& g, const ListAssignment& lists,
                                                 std::span<const Vertex> x);

struct Canvas {
  PlaneGraph graph;
  SubgraphRef scaffold;
  ListAssignment lists;
};

enum class CanvasClause {
  kDisconnected,
  kListsMismatch,
  kEmptyList,
  kScaffoldMalformed,
  kScaffoldOffOuterFace,
  kInteriorListTooSmall,
  kListTooSmall,
  kScaffoldNotColorable,
};

std::string to_string(CanvasClause clause);

struct CanvasViolation {
  CanvasClause clause;
  Vertex vertex = -1;  // -1 when the clause is not tied to a vertex
  std::string message;
};

struct CanvasReport {
  std::vector<CanvasViolation> violations;
  std::optional<Coloring> scaffold_coloring;
  bool path_canvas = false;
  std::vector<Vertex> scaffold_path;  // ordered from the smaller end, when path_canvas

  bool ok() const { return violations.empty(); }
  bool violates(CanvasClause clause) const;
};

CanvasReport validate_canvas(const Canvas& c);

/// Vertices of S in path order when S is a path along the outer walk.
std::optional<std::vector<Vertex>> scaffold_path(const Canvas& c);

/// Subgraph consisting of the path through `vertices` (consecutive pairs must be adjacent).
SubgraphRef path_subgraph(const PlaneGraph& g, std::span<const Vertex> vertices);

struct MainInstance {
  PlaneGraph graph;
  ListAssignment lists;
  std::vector<std::vector<Vertex>> sets;
  std::vector<RestrictionCert> certs;
  std::vector<std::vector<int>> pairwise_distance;  // kUnreachable for "infinite"
  int min_distance = kUnreachable;
};

/// Validates the many-sets hypotheses (except the distance bound, which is
/// only measured). Throws ArgumentError naming the first failing set or vertex.
MainInstance build_main_instance(const PlaneGraph& g, const ListAssignment& lists,
                                 const std::vector<std::vector<Vertex>>& sets);

}  // namespace canvas_forge
