#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "canvas_forge/canvas.hpp"
#include "canvas_forge/coloring.hpp"
#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge {

/// Extends `fixed` to a total L-colouring of g (or of `within`). Branches on the
/// uncoloured vertex with fewest remaining colours, ties by index, colours
/// ascending. Throws ArgumentError if `fixed` is improper or off-list.
std::optional<Coloring> solve_exhaustive(const PlaneGraph& g, const ListAssignment& lists, const Coloring& fixed,
                                         const SubgraphRef* within = nullptr);

/// Number of total extensions of `fixed`, stopping at `limit`.
std::uint64_t count_colorings(const PlaneGraph& g, const ListAssignment& lists, const Coloring& fixed,
                              const SubgraphRef* within = nullptr,
                              std::uint64_t limit = std::numeric_limits<std::uint64_t>::max());

/// True iff some L-colouring of g (or `within`) agrees with phi on V(T).
/// phi must be a total, proper L-colouring of T.
bool extends(const PlaneGraph& g, const ListAssignment& lists, const SubgraphRef& t, const Coloring& phi,
             const SubgraphRef* within = nullptr);

/// Raised when the constructive recursion fails on a canvas it accepted.
class ThomassenFailure : public std::logic_error {
 public:
  ThomassenFailure(const std::string& what, std::string instance_json)
      : std::logic_error(what), instance_json_(std::move(instance_json)) {}
  const std::string& instance_json() const { return instance_json_; }

 private:
  std::string instance_json_;
};

/// Constructive colouring of a path-canvas whose path has at most two vertices.
/// Throws ArgumentError on an invalid canvas.
Coloring solve_thomassen(const Canvas& c);

/// Exhaustive search on a validated many-sets instance.
std::optional<Coloring> solve_main(const MainInstance& instance);

}  // namespace canvas_forge
