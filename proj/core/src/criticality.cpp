#include "canvas_forge/criticality.hpp"

#include <algorithm>

#include "canvas_forge/canvas.hpp"
#include "canvas_forge/color_solver.hpp"

namespace canvas_forge {

namespace {

SubgraphRef without(const PlaneGraph& host, const SubgraphRef& g, const Deletion& d) {
  SubgraphRef out = g;
  if (d.kind == Deletion::Kind::kEdge) out.remove_edge(d.id);
  else out.remove_vertex(host, d.id);
  return out;
}

std::vector<Deletion> maximal_deletions(const PlaneGraph& host, const SubgraphRef& t, const SubgraphRef& g) {
  std::vector<Deletion> out;
  for (EdgeId e : g.edges())
    if (!t.has_edge(e)) out.push_back({Deletion::Kind::kEdge, e});
  for (Vertex v : g.vertices()) {
    if (t.has_vertex(v)) continue;
    bool isolated = true;
    for (Dart d : host.darts_at(v))
      if (g.has_edge(PlaneGraph::edge_of(d))) isolated = false;
    if (isolated) out.push_back({Deletion::Kind::kVertex, v});
  }
  return out;
}

void require_subgraph(const PlaneGraph& host, const SubgraphRef& inner, const SubgraphRef& outer, const char* what) {
  if (!inner.valid(host) || !outer.valid(host) || !inner.is_subgraph_of(outer)) throw ArgumentError(what);
}

}  // namespace

void for_each_t_coloring(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& t,
                         const std::function<bool(const Coloring&)>& visit) {
  std::vector<Vertex> order = t.vertices();
  std::vector<std::vector<Vertex>> earlier(host.num_vertices());
  for (EdgeId e : t.edges()) {
    auto [a, b] = host.ends(e);
    if (a < b) earlier[b].push_back(a);
    else earlier[a].push_back(b);
  }
  Coloring phi(host.num_vertices());
  bool go = true;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (!go) return;
    if (i == order.size()) {
      go = visit(phi);
      return;
    }
    Vertex v = order[i];
    ColorSet options = lists[v];
    for (Vertex u : earlier[v]) options.erase(phi[u]);
    for (Color c : options) {
      phi.assign(v, c);
      rec(i + 1);
      if (!go) break;
    }
    phi.clear(v);
  };
  rec(0);
}

CriticalityReport is_T_critical(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& t,
                                const SubgraphRef& g) {
  require_subgraph(host, t, g, "T is not a subgraph of G");
  CriticalityReport report;
  if (t == g) return report;
  std::vector<Deletion> pending = maximal_deletions(host, t, g);
  std::vector<SubgraphRef> reduced;
  for (const Deletion& d : pending) reduced.push_back(without(host, g, d));
  for_each_t_coloring(host, lists, t, [&](const Coloring& phi) {
    ++report.t_colorings;
    if (extends(host, lists, t, phi, &g)) return true;
    for (std::size_t i = 0; i < pending.size();) {
      if (extends(host, lists, t, phi, &reduced[i])) {
        report.witnesses.push_back({pending[i], phi});
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    return !pending.empty();
  });
  report.unwitnessed = std::move(pending);
  report.is_critical = report.unwitnessed.empty();
  auto key = [](const CriticalityWitness& w) { return std::pair(static_cast<int>(w.deletion.kind), w.deletion.id); };
  std::sort(report.witnesses.begin(), report.witnesses.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return report;
}

CriticalityReport is_T_critical(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& t) {
  return is_T_critical(host, lists, t, SubgraphRef::whole(host));
}

bool verify_witnesses(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& t, const SubgraphRef& g,
                      const CriticalityReport& report) {
  for (const auto& w : report.witnesses) {
    SubgraphRef reduced = without(host, g, w.deletion);
    if (!extends(host, lists, t, w.coloring, &reduced)) return false;
    if (extends(host, lists, t, w.coloring, &g)) return false;
  }
  return true;
}

SubgraphRef extract_critical(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& t,
                             const Coloring& phi, const SubgraphRef* g) {
  SubgraphRef cur = g ? *g : SubgraphRef::whole(host);
  require_subgraph(host, t, cur, "T is not a subgraph of G");
  if (extends(host, lists, t, phi, &cur)) throw ArgumentError("phi extends to G; nothing to extract");
  for (EdgeId e : cur.edges()) {
    if (t.has_edge(e)) continue;
    cur.remove_edge(e);
    if (extends(host, lists, t, phi, &cur)) cur.add_edge(host, e);
  }
  for (const Deletion& d : maximal_deletions(host, t, cur))
    if (d.kind == Deletion::Kind::kVertex) cur.remove_vertex(host, d.id);
  return cur;
}

bool check_critical_cut(const PlaneGraph& host, const ListAssignment& lists, const SubgraphRef& s,
                        const SubgraphRef& g1, const SubgraphRef& g2) {
  const SubgraphRef g = g1.unite(g2);
  require_subgraph(host, s, g1, "S is not contained in G1");
  require_subgraph(host, g2, g, "G2 is not a subgraph of G");
  const SubgraphRef common = g1.intersect(g2);
  if (common == g2) throw ArgumentError("G1 ∩ G2 is not a proper subgraph of G2");
  if (!is_T_critical(host, lists, s, g).is_critical) throw ArgumentError("G is not S-critical");
  return is_T_critical(host, lists, common, g2).is_critical;
}

std::vector<CutSplit> enumerate_cut_splits(const PlaneGraph& host, const SubgraphRef& s, const SubgraphRef& g,
                                           int max_separator, std::size_t limit) {
  std::vector<CutSplit> out;
  const std::vector<Vertex> verts = g.vertices();
  const int k = static_cast<int>(verts.size());
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int from) {
    if (out.size() >= limit) return;
    if (!pick.empty()) {
      SubgraphRef rest = g;
      for (int i : pick) rest.remove_vertex(host, verts[i]);
      auto labels = component_labels(host, &rest);
      int ncomp = 0;
      for (int c : labels) ncomp = std::max(ncomp, c + 1);
      std::vector<char> touches_s(static_cast<std::size_t>(ncomp), 0);
      for (Vertex v : s.vertices())
        if (labels[v] >= 0) touches_s[labels[v]] = 1;
      std::vector<int> free_comps;
      for (int c = 0; c < ncomp; ++c)
        if (!touches_s[c]) free_comps.push_back(c);
      const int fc = std::min<int>(static_cast<int>(free_comps.size()), 12);
      for (std::uint32_t mask = 1; mask < (1U << fc) && out.size() < limit; ++mask) {
        std::vector<char> in_b(static_cast<std::size_t>(host.num_vertices()), 0);
        for (int i = 0; i < fc; ++i)
          if (mask & (1U << i))
            for (Vertex v : verts)
              if (labels[v] == free_comps[i]) in_b[v] = 1;
        SubgraphRef g1 = g, g2 = SubgraphRef::empty(host);
        for (Vertex v : verts)
          if (in_b[v]) g1.remove_vertex(host, v);
        for (int i : pick) g2.add_vertex(verts[i]);
        for (EdgeId e : g.edges()) {
          auto [a, b] = host.ends(e);
          if (in_b[a] || in_b[b]) {
            g2.add_vertex(a);
            g2.add_vertex(b);
            g2.add_edge(host, e);
          }
        }
        out.push_back({g1, g2});
        SubgraphRef g2x = g2;
        bool inner = false;
        for (EdgeId e : g1.edges()) {
          auto [a, b] = host.ends(e);
          if (g2.has_vertex(a) && g2.has_vertex(b)) {
            g2x.add_edge(host, e);
            inner = true;
          }
        }
        if (inner && out.size() < limit) out.push_back({g1, g2x});
      }
    }
    if (static_cast<int>(pick.size()) == max_separator) return;
    for (int i = from; i < k; ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return out;
}

bool check_bellows_lists(const PlaneGraph& host, const ListAssignment& lists, std::span<const Vertex> path,
                         const SubgraphRef& g) {
  if (path.size() != 3) throw ArgumentError("bellows check needs a path with three vertices");
  SubgraphRef p = path_subgraph(host, path);
  require_subgraph(host, p, g, "P is not a subgraph of G");
  EmbeddedSubgraph es = embed_subgraph(host, g);
  ListAssignment local(es.graph.num_vertices());
  for (Vertex v = 0; v < es.graph.num_vertices(); ++v) local[v] = lists[es.to_host[v]];
  std::vector<Vertex> local_path;
  for (Vertex v : path) local_path.push_back(es.from_host[v]);
  Canvas c{es.graph, path_subgraph(es.graph, local_path), local};
  CanvasReport report = validate_canvas(c);
  if (!report.ok() || !report.path_canvas) throw ArgumentError("input is not a path-canvas");
  if (!is_T_critical(host, lists, p, g).is_critical) throw ArgumentError("input is not P-critical");

  auto off_path = [&](Vertex v) { return std::find(local_path.begin(), local_path.end(), v) == local_path.end(); };
  for (Vertex v = 0; v < es.graph.num_vertices(); ++v) {
    if (!off_path(v)) continue;
    if (es.graph.on_outer_face(v) && local[v].size() != 3) return false;
    if (local[v].size() == 3) continue;
    bool neighbour = false;
    for (Vertex u : es.graph.neighbors(v))
      if (off_path(u) && local[u].size() == 3) neighbour = true;
    if (!neighbour) return false;
  }
  return true;
}

}  // namespace canvas_forge
