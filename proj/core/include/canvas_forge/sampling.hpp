#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "canvas_forge/canvas.hpp"
#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge {

using Rng = std::mt19937_64;

/// Independent seed for instance `index` of a campaign seeded with `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, bound); portable across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform random k-subset of {0, ..., palette-1}.
ColorSet random_subset(Rng& rng, int palette, int k);

/// Random valid path-canvas on a connected graph: a path of at most two
/// vertices on the outer walk, singleton or small lists on it, lists of size
/// 3..5 elsewhere on the outer face and 5 inside. Needs palette >= 5.
Canvas sample_path_canvas(const PlaneGraph& g, int palette, Rng& rng);

struct FaceInstance {
  FaceId face = -1;
  std::vector<Vertex> special_path;
  ListAssignment lists;
};

/// Lists under which a random face is restricted, with 5-lists off its boundary.
FaceInstance sample_restricted_face(const PlaneGraph& g, int palette, Rng& rng);

/// Random connected plane graph on n vertices: a random tree grown by pendant
/// insertions at random corners, then up to `extra_edges` random face chords.
PlaneGraph random_plane_graph(int n, int extra_edges, Rng& rng);

}  // namespace canvas_forge
