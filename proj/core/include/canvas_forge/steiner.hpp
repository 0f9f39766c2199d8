#pragma once

#include <span>
#include <vector>

#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge {

/// A maximal tree path whose interior vertices have tree degree 2 and are not terminals.
struct Seam {
  std::vector<Vertex> path;  // from the smaller end to the larger end
  int length = 0;
  Vertex midpoint = -1;
};

struct SteinerTree {
  SubgraphRef tree;
  std::vector<Vertex> terminals;  // sorted, distinct
  std::vector<Vertex> branch_vertices;  // vertices kept by suppression (terminals and degree != 2)
  std::vector<Seam> seams;
};

/// Terminal cap for the exact DP: 8, or CANVAS_FORGE_CAP.
int steiner_terminal_cap();

/// Minimum-edge connected subgraph containing the terminals (Dreyfus-Wagner).
/// Among minimisers, maximises the number of tree edges incident with
/// `tiebreak`. Throws ArgumentError on empty or disconnected terminals or when
/// the cap is exceeded.
SteinerTree optimal_steiner(const PlaneGraph& g, std::span<const Vertex> terminals,
                            std::span<const Vertex> tiebreak = {});

/// Suppresses degree-2 non-terminals. Midpoint: the centre for even lengths,
/// the lower-indexed central vertex for odd lengths.
std::vector<Seam> seams_and_midpoints(const PlaneGraph& g, const SubgraphRef& tree, std::span<const Vertex> terminals);

/// Builds a SteinerTree record (branch vertices, seams) for any tree.
SteinerTree make_steiner_tree(const PlaneGraph& g, const SubgraphRef& tree, std::span<const Vertex> terminals);

struct SteinerLemmaReport {
  bool acyclic = false;
  bool leaves_are_terminals = false;
  bool seam_count_bound = false;
  bool midpoints_far_from_terminals = false;
  bool midpoints_pairwise_apart = false;
  int seam_count = 0;

  bool all() const {
    return acyclic && leaves_are_terminals && seam_count_bound && midpoints_far_from_terminals &&
           midpoints_pairwise_apart;
  }
};

/// Checks the five optimal-tree properties. Distance bounds are compared in
/// integers: 2 d(mid, S) >= |e| - 1 and 4 d(mid e, mid f) >= |e| + |f| - 2.
SteinerLemmaReport verify_steiner_lemma(const SteinerTree& t, const PlaneGraph& g);

/// Exhaustive minimum edge count over connected vertex sets containing the
/// terminals (|U| - 1 for the smallest such U); kUnreachable if none.
int steiner_brute_force_edges(const PlaneGraph& g, std::span<const Vertex> terminals);

}  // namespace canvas_forge
