#pragma once

#include <string>
#include <vector>

#include "canvas_forge/canvas.hpp"
#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge {

/// A 3-vertex span a-b-c with one admissible outer-walk path from a to c.
struct Span {
  std::vector<Vertex> path;      // a, b, c
  std::vector<Vertex> delta;     // a, ..., c along the outer walk
  std::vector<Vertex> exterior;  // (delta ∪ Int(P' ∪ delta)) minus the path, sorted
};

struct TruncationResult {
  std::vector<Vertex> essential_cutvertices;
  std::vector<Span> spans;
  std::vector<Vertex> superfluous;
  SubgraphRef g_star;
  std::vector<Vertex> c_star;  // outer vertex walk of G* (vertices only when edgeless)
};

/// Cut vertices v of G such that every component of G - v meets S.
std::vector<Vertex> essential_cutvertices(const Canvas& c);

TruncationResult truncate(const Canvas& c);

/// V(G) minus (R ∪ N(R)) lies in G*, with R the 3-list vertices outside S.
/// Throws ArgumentError unless c is a valid S-critical canvas.
bool check_subneighbors(const Canvas& c);

struct GrowthProfile {
  Vertex center = -1;
  int depth = 0;             // d(center, H)
  std::vector<int> rings;    // |N_r| for r = 0..depth
  std::vector<int> balls;    // |B_r| for r = 0..depth
  bool weak_bound = false;   // |N_r| >= 2 for 1 <= r <= depth
  double exponent = 0.0;     // min over r >= 1 of log2|N_r| / r (diagnostic)
};

/// Ring sizes around v up to its distance from H. With `verify`, checks that
/// all lists have size >= 5 and that g is H-critical; throws ArgumentError
/// otherwise or when v is in H.
GrowthProfile growth_profile(const PlaneGraph& g, const ListAssignment& lists, const SubgraphRef& h, Vertex v,
                             bool verify = true);

struct RatioInput {
  std::string id;
  Canvas canvas;  // critical canvas; H is taken to be S
};

struct RatioRow {
  std::string id;
  int s_size = 0;
  int g_star_size = 0;
  int g_size = 0;
  int h_size = 0;
  double star_ratio = 0.0;  // |V(G*)| / |S|
  double size_ratio = 0.0;  // |V(G)| / |V(H)|
  bool five_lists = false;  // every list has size >= 5
  bool excluded = false;
  std::string note;
};

struct RatioTable {
  std::vector<RatioRow> rows;
  double max_star_ratio = 0.0;
  double max_size_ratio = 0.0;  // over five-list rows only
};

/// Empirical lower estimates for the two linear constants. Instances with an
/// outer chord between two 3-list vertices outside S are excluded and noted.
RatioTable ratio_diagnostics(const std::vector<RatioInput>& corpus);

/// CSV: id,s_size,g_star_size,g_size,h_size,star_ratio,size_ratio,five_lists,excluded,note
std::string ratio_csv(const RatioTable& table);

}  // namespace canvas_forge
