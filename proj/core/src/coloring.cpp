#include "canvas_forge/coloring.hpp"

#include <algorithm>
#include <string>

namespace canvas_forge {

void ColorSet::insert(Color c) {
  if (c < 0 || c >= kMaxColors)
    throw ArgumentError("colour " + std::to_string(c) + " outside 0.." + std::to_string(kMaxColors - 1));
  bits_ |= 1ULL << c;
}

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  for (Color c : *this) out.push_back(c);
  return out;
}

bool ListAssignment::valid_for(const PlaneGraph& g) const {
  if (size() != g.num_vertices()) return false;
  return std::none_of(lists_.begin(), lists_.end(), [](ColorSet s) { return s.empty(); });
}

int Coloring::assigned_count() const {
  return static_cast<int>(std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != kNoColor; }));
}

Coloring Coloring::restricted_to(const SubgraphRef& keep) const {
  Coloring out(size());
  for (Vertex v = 0; v < size(); ++v)
    if (keep.has_vertex(v)) out.assign(v, (*this)[v]);
  return out;
}

bool is_proper(const PlaneGraph& g, const Coloring& c, const SubgraphRef* within) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (within && !within->has_edge(e)) continue;
    auto [a, b] = g.ends(e);
    if (c.assigned(a) && c[a] == c[b]) return false;
  }
  return true;
}

bool within_lists(const ListAssignment& lists, const Coloring& c) {
  for (Vertex v = 0; v < c.size(); ++v)
    if (c.assigned(v) && !lists[v].contains(c[v])) return false;
  return true;
}

bool is_list_coloring(const PlaneGraph& g, const ListAssignment& lists, const Coloring& c,
                      const SubgraphRef* sub) {
  if (c.size() != g.num_vertices() || lists.size() != g.num_vertices()) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (sub && !sub->has_vertex(v)) continue;
    if (!c.assigned(v) || !lists[v].contains(c[v])) return false;
  }
  return is_proper(g, c, sub);
}

}  // namespace canvas_forge
