#include "canvas_forge/serialize.hpp"

#include <cstdint>

#include "json_io.hpp"

namespace canvas_forge {

namespace detail {

Json vertices_json(std::span<const Vertex> vs) {
  Json arr = Json::array();
  for (Vertex v : vs) arr.push_back(v);
  return arr;
}

Json graph_json(const PlaneGraph& g) {
  Json j;
  j["n"] = g.num_vertices();
  j["rotation"] = g.rotation();
  j["outer_face"] = g.num_vertices() > 0 ? g.outer_walk() : std::vector<Vertex>{};
  return j;
}

PlaneGraph graph_from(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto rotation = j.at("rotation").get<std::vector<std::vector<Vertex>>>();
    if (static_cast<int>(rotation.size()) != n) throw ArgumentError("rotation has the wrong number of vertices");
    std::vector<Vertex> outer;
    if (j.contains("outer_face")) outer = j.at("outer_face").get<std::vector<Vertex>>();
    return PlaneGraph::from_rotation(rotation, outer);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed graph JSON: ") + e.what());
  }
}

Json lists_json(const ListAssignment& lists) {
  Json j = Json::object();
  for (Vertex v = 0; v < lists.size(); ++v) j[std::to_string(v)] = lists[v].to_vector();
  return j;
}

ListAssignment lists_from(const Json& j, int n) {
  ListAssignment lists(n);
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      Vertex v = std::stoi(it.key());
      if (v < 0 || v >= n) throw ArgumentError("list for unknown vertex " + it.key());
      for (Color c : it.value().get<std::vector<Color>>()) lists[v].insert(c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed lists JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ArgumentError*>(&e)) throw;
    throw ArgumentError(std::string("malformed lists JSON: ") + e.what());
  }
  return lists;
}

Json coloring_json(const Coloring& c) {
  Json j = Json::object();
  for (Vertex v = 0; v < c.size(); ++v)
    if (c.assigned(v)) j[std::to_string(v)] = c[v];
  return j;
}

Coloring coloring_from(const Json& j, int n) {
  Coloring c(n);
  for (auto it = j.begin(); it != j.end(); ++it) {
    Vertex v = std::stoi(it.key());
    if (v < 0 || v >= n) throw ArgumentError("colour for unknown vertex " + it.key());
    c.assign(v, it.value().get<Color>());
  }
  return c;
}

Json subgraph_json(const PlaneGraph& g, const SubgraphRef& s) {
  Json j;
  j["vertices"] = s.vertices();
  Json edges = Json::array();
  for (EdgeId e : s.edges()) {
    auto [a, b] = g.ends(e);
    edges.push_back({a, b});
  }
  j["edges"] = std::move(edges);
  return j;
}

SubgraphRef subgraph_from(const PlaneGraph& g, const Json& j) {
  SubgraphRef s = SubgraphRef::empty(g);
  for (Vertex v : j.at("vertices").get<std::vector<Vertex>>()) {
    if (v < 0 || v >= g.num_vertices()) throw ArgumentError("subgraph vertex out of range");
    s.add_vertex(v);
  }
  for (const auto& e : j.at("edges")) {
    auto id = g.find_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    if (!id) throw ArgumentError("subgraph edge is not an edge of the graph");
    s.add_edge(g, *id);
  }
  return s;
}

Json canvas_json(const Canvas& c) {
  Json j;
  j["graph"] = graph_json(c.graph);
  j["scaffold"] = subgraph_json(c.graph, c.scaffold);
  j["lists"] = lists_json(c.lists);
  return j;
}

Json cert_json(const RestrictionCert& cert) {
  Json j;
  j["face_id"] = cert.face_id;
  j["special_path"] = cert.special_path;
  j["path_coloring"] = coloring_json(cert.path_coloring);
  j["face_contains_set"] = cert.face_contains_set;
  return j;
}

}  // namespace detail

std::string graph_to_json(const PlaneGraph& g) { return detail::graph_json(g).dump(); }

PlaneGraph graph_from_json(std::string_view text) {
  try {
    return detail::graph_from(detail::Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("invalid JSON: ") + e.what());
  }
}

std::string lists_to_json(const ListAssignment& lists) { return detail::lists_json(lists).dump(); }

ListAssignment lists_from_json(std::string_view text, int n) {
  try {
    return detail::lists_from(detail::Json::parse(text), n);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("invalid JSON: ") + e.what());
  }
}

std::string coloring_to_json(const Coloring& c) { return detail::coloring_json(c).dump(); }

std::string canvas_to_json(const Canvas& c) { return detail::canvas_json(c).dump(); }

Canvas canvas_from_json(std::string_view text) {
  try {
    auto j = detail::Json::parse(text);
    Canvas c;
    c.graph = detail::graph_from(j.at("graph"));
    c.scaffold = detail::subgraph_from(c.graph, j.at("scaffold"));
    c.lists = detail::lists_from(j.at("lists"), c.graph.num_vertices());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("invalid canvas JSON: ") + e.what());
  }
}

std::string cert_to_json(const RestrictionCert& cert) { return detail::cert_json(cert).dump(); }

std::string main_instance_to_json(const MainInstance& inst) {
  detail::Json j;
  j["graph"] = detail::graph_json(inst.graph);
  j["lists"] = detail::lists_json(inst.lists);
  j["sets"] = inst.sets;
  return j.dump();
}

MainInstance main_instance_from_json(std::string_view text) {
  try {
    auto j = detail::Json::parse(text);
    PlaneGraph g = detail::graph_from(j.at("graph"));
    ListAssignment lists = detail::lists_from(j.at("lists"), g.num_vertices());
    return build_main_instance(g, lists, j.at("sets").get<std::vector<std::vector<Vertex>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("invalid instance JSON: ") + e.what());
  }
}

std::string content_hash(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 15U];
  return out;
}

}  // namespace canvas_forge
