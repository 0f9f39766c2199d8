#pragma once

#include "json.hpp"

#include "canvas_forge/canvas.hpp"
#include "canvas_forge/coloring.hpp"
#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge::detail {

using Json = nlohmann::ordered_json;

Json graph_json(const PlaneGraph& g);
PlaneGraph graph_from(const Json& j);
Json lists_json(const ListAssignment& lists);
ListAssignment lists_from(const Json& j, int n);
Json coloring_json(const Coloring& c);
Coloring coloring_from(const Json& j, int n);
Json subgraph_json(const PlaneGraph& g, const SubgraphRef& s);
SubgraphRef subgraph_from(const PlaneGraph& g, const Json& j);
Json canvas_json(const Canvas& c);
Json cert_json(const RestrictionCert& cert);
Json vertices_json(std::span<const Vertex> vs);

}  // namespace canvas_forge::detail
