#pragma once

#include <string>
#include <string_view>

#include "canvas_forge/canvas.hpp"
#include "canvas_forge/coloring.hpp"
#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge {

/// {"n": int, "rotation": [[...]...], "outer_face": [vertex walk]}
std::string graph_to_json(const PlaneGraph& g);
PlaneGraph graph_from_json(std::string_view text);

/// {"<vertex>": [sorted colours], ...}
std::string lists_to_json(const ListAssignment& lists);
ListAssignment lists_from_json(std::string_view text, int n);

/// {"<vertex>": colour, ...} over assigned vertices
std::string coloring_to_json(const Coloring& c);

/// {"graph": ..., "scaffold": {"vertices": [...], "edges": [[a, b], ...]}, "lists": ...}
std::string canvas_to_json(const Canvas& c);
Canvas canvas_from_json(std::string_view text);

std::string cert_to_json(const RestrictionCert& cert);

/// {"graph": ..., "lists": ..., "sets": [[...], ...]}; reading rebuilds and revalidates.
std::string main_instance_to_json(const MainInstance& inst);
MainInstance main_instance_from_json(std::string_view text);

/// 64-bit FNV-1a of the text, as 16 hex digits (instance ids in reports).
std::string content_hash(std::string_view text);

}  // namespace canvas_forge
