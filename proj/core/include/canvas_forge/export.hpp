#pragma once

#include <string>
#include <string_view>

#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge {

enum class ExportFormat { kJson, kDot, kCsv };

/// "json", "dot" or "csv"; throws ArgumentError otherwise.
ExportFormat parse_export_format(std::string_view name);

/// Edge list "edge,u,v" with one row per edge in id order.
std::string graph_to_csv(const PlaneGraph& g);

std::string export_graph(const PlaneGraph& g, ExportFormat format);

/// Renders a serialized graph, canvas or many-sets instance (told apart by
/// their keys). A many-sets instance is cut along its seams: JSON gives the
/// surgery result with its projection, CSV the ledger row under its header
/// and DOT the cut graph. Canvases render their graph, except JSON, which
/// is re-serialized in canonical form.
std::string export_document(std::string_view text, ExportFormat format, int distance_parameter = 0,
                            double c1 = 1.0, double c2 = 1.0);

}  // namespace canvas_forge
