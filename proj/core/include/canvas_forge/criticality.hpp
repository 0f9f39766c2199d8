#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "canvas_forge/coloring.hpp"
#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge {

/// A maximal proper subgraph G - e (edge) or G - v (isolated vertex).
struct Deletion {
  enum class Kind { kEdge, kVertex };
  Kind kind = Kind::kEdge;
  int id = -1;

  friend bool operator==(const Deletion&, const Deletion&) = default;
};

struct CriticalityWitness {
  Deletion deletion;
  Coloring coloring;  // colouring of T extending to G minus the deletion but not to G
};

struct CriticalityReport {
  bool is_critical = false;
  std::vector<CriticalityWitness> witnesses;
  std::vector<Deletion> unwitnessed;
  std::uint64_t t_colorings = 0;
};

/// G (the subgraph `g` of `host`) is T-critical. It suffices to test the
/// maximal proper subgraphs containing T: every such subgraph lies in some
/// G - e with e outside T, or in G - v with v an isolated vertex outside T,
/// and extendability passes to subgraphs.
CriticalityReport is_T_critical(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& t,
                                const SubgraphRef& g);
CriticalityReport is_T_critical(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& t);

/// Re-checks every stored witness with `extends`.
bool verify_witnesses(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& t, const SubgraphRef& g,
                      const CriticalityReport& report);

/// Visits the L-colourings of T in lexicographic order (vertex index, then
/// colour) until `visit` returns false.
void for_each_t_coloring(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& t,
                         const std::function<bool(const Coloring&)>& visit);

/// Greedy pruning: deletes edges outside T in index order while phi still does
/// not extend, then drops isolated vertices outside T. The result is T-critical.
SubgraphRef extract_critical(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& t,
                             const Coloring& phi, const SubgraphRef* g = nullptr);

/// G = g1 ∪ g2 is S-critical, S ⊆ g1 and g1 ∩ g2 is a proper subgraph of g2;
/// returns whether g2 is (g1 ∩ g2)-critical. Throws ArgumentError if a
/// hypothesis fails.
bool check_critical_cut(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& s,
                        const SubgraphRef& g1, const SubgraphRef& g2);

struct CutSplit {
  SubgraphRef g1;
  SubgraphRef g2;
};

/// Vertex separations of G: a separator X with 1 <= |X| <= max_separator and
/// a nonempty union B of components of G - X avoiding S. G2 is G[B ∪ X]
/// without the edges inside X, G1 is G - B; a second split moves the edges
/// inside X into G2 as well. At most `limit` splits.
std::vector<CutSplit> enumerate_cut_splits(const PlaneGraph& host, const SubgraphRef& s, const SubgraphRef& g,
                                           int max_separator, std::size_t limit);

/// List-size consequences for a critical path-canvas with a 3-vertex path:
/// outer vertices off P have 3-lists, and every vertex off P has a 3-list or a
/// neighbour off P with a 3-list. Throws ArgumentError unless G is a
/// P-critical canvas.
bool check_bellows_lists(const PlaneGraph& host, const ListAssignment& lists, std::span<const Vertex> path,
                         const SubgraphRef& g);

}  // namespace canvas_forge
