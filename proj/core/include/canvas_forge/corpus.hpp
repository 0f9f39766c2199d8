#pragma once

#include <optional>
#include <vector>

#include "canvas_forge/canvas.hpp"
#include "canvas_forge/coloring.hpp"
#include "canvas_forge/plane_graph.hpp"
#include "canvas_forge/sampling.hpp"

namespace canvas_forge {

enum class CriticalKind {
  kTight,        // short outer path T, lists of size 1..3
  kPathCanvas3,  // 3-vertex outer path with singleton lists, 3-lists outside, 5-lists inside
  kFiveList,     // every list has size 5
};

/// A T-critical subgraph of a random host, found by pruning the host against
/// the first T-colouring (lexicographic) that does not extend.
struct CriticalInstance {
  PlaneGraph host;
  ListAssignment lists;
  SubgraphRef t;
  SubgraphRef critical;  // subgraph of host
  Coloring phi;          // the non-extending colouring used for pruning
};

/// None when the sampled host has no non-extending T-colouring.
std::optional<CriticalInstance> sample_critical_instance(CriticalKind kind, int n_max, int palette, Rng& rng);

/// Repeats sample_critical_instance up to `attempts` times.
std::optional<CriticalInstance> draw_critical_instance(CriticalKind kind, int n_max, int palette, Rng& rng,
                                                       int attempts = 200);

/// The critical subgraph as a stand-alone canvas (scaffold T).
Canvas critical_canvas(const CriticalInstance& inst);

/// Random proper subgraph T' with T ⊆ T' ⊊ critical.
SubgraphRef sample_intermediate(const CriticalInstance& inst, Rng& rng);

/// Grids, ladders or random plane graphs carrying m faces at pairwise
/// boundary distance >= min_distance. Boundary vertices get random 3-lists
/// except a special path (one vertex or one boundary edge) with singletons;
/// every other vertex gets a random 5-list. None if no placement was found.
std::optional<MainInstance> sample_face_instance(int m, int min_distance, int palette, Rng& rng);

}  // namespace canvas_forge
