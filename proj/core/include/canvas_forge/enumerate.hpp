#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge {

/// Canonical byte string of an embedded graph up to orientation-preserving or
/// reversing isomorphism. With `respect_outer_face` the outer face is part of
/// the identity (roots are restricted to outer-face darts).
///
/// Layout: n, then for every vertex in BFS label order its degree followed by
/// its neighbour labels in rotation order starting from the entering dart.
/// The minimum over all admissible roots and both orientations is returned.
std::string canonical_code(const PlaneGraph& g, bool respect_outer_face = true);

/// Rebuilds the plane graph encoded by a canonical code. The outer face is the
/// face of the root dart 0 -> first neighbour of 0.
PlaneGraph decode_canonical(const std::string& code);

/// Hard cap on enumeration size: 10, or CANVAS_FORGE_CAP when set.
int enumeration_cap();

/// Canonical codes of all connected simple plane graphs (outer face marked)
/// with at most n_max vertices, ordered by (vertices, edges, code).
std::vector<std::string> enumerate_plane_graph_codes(int n_max);

/// Streams the enumeration in deterministic order. `shard`/`num_shards`
/// select every num_shards-th graph for partitioned consumption.
void for_each_plane_graph(int n_max, const std::function<void(std::size_t index, const PlaneGraph&)>& fn,
                          std::size_t shard = 0, std::size_t num_shards = 1);

std::vector<PlaneGraph> enumerate_plane_graphs(int n_max);

}  // namespace canvas_forge
