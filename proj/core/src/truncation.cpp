#include "canvas_forge/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "canvas_forge/criticality.hpp"

namespace canvas_forge {

namespace {

// Vertices strictly inside the side of a simple cycle that avoids the outer face.
std::vector<Vertex> inner_side(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  std::vector<char> on_cycle(g.num_vertices(), 0), cycle_edge(g.num_edges(), 0);
  std::vector<Dart> darts;
  for (std::size_t i = 0; i < len; ++i) {
    Dart d = *g.find_dart(cycle[i], cycle[(i + 1) % len]);
    darts.push_back(d);
    on_cycle[cycle[i]] = 1;
    cycle_edge[PlaneGraph::edge_of(d)] = 1;
  }
  auto region = [&](bool left) {
    std::vector<char> reached(g.num_faces(), 0);
    std::vector<FaceId> queue;
    for (Dart d : darts) {
      FaceId f = g.face_of(left ? d : PlaneGraph::twin(d));
      if (!reached[f]) {
        reached[f] = 1;
        queue.push_back(f);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Dart d : g.face(queue[i]).boundary_walk) {
        if (cycle_edge[PlaneGraph::edge_of(d)]) continue;
        FaceId f = g.face_of(PlaneGraph::twin(d));
        if (!reached[f]) {
          reached[f] = 1;
          queue.push_back(f);
        }
      }
    return reached;
  };
  std::vector<char> side = region(true);
  if (side[g.outer_face()]) side = region(false);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (on_cycle[v]) continue;
    for (Dart d : g.darts_at(v))
      if (side[g.face_of(d)]) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

}  // namespace

std::vector<Vertex> essential_cutvertices(const Canvas& c) {
  const PlaneGraph& g = c.graph;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    SubgraphRef rest = SubgraphRef::whole(g);
    rest.remove_vertex(g, v);
    auto labels = component_labels(g, &rest);
    int ncomp = 0;
    for (int l : labels) ncomp = std::max(ncomp, l + 1);
    if (ncomp < 2) continue;
    std::vector<char> hit(ncomp, 0);
    for (Vertex s : c.scaffold.vertices())
      if (labels[s] >= 0) hit[labels[s]] = 1;
    if (std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; })) out.push_back(v);
  }
  return out;
}

TruncationResult truncate(const Canvas& c) {
  const PlaneGraph& g = c.graph;
  const int n = g.num_vertices();
  TruncationResult res;
  res.essential_cutvertices = essential_cutvertices(c);
  std::vector<char> blocked(n, 0);
  for (Vertex v : res.essential_cutvertices) blocked[v] = 1;
  for (Vertex v : c.scaffold.vertices()) blocked[v] = 1;

  const std::vector<Vertex> walk = n > 0 ? g.outer_walk() : std::vector<Vertex>{};
  const std::size_t len = walk.size();
  std::vector<char> superfluous(n, 0);
  std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> seen;

  for (Vertex b = 0; b < n; ++b) {
    std::vector<Vertex> nb = g.neighbors(b);
    std::sort(nb.begin(), nb.end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex a = nb[i], cc = nb[j];
        if (c.lists[a].size() >= 5 || c.lists[cc].size() >= 5) continue;
        for (std::size_t start = 0; start < len; ++start) {
          if (walk[start] != a) continue;
          for (int dir : {1, -1}) {
            std::vector<Vertex> delta{a};
            std::vector<char> used(n, 0);
            used[a] = 1;
            for (std::size_t step = 1; step < len; ++step) {
              const std::size_t pos = dir > 0 ? (start + step) % len : (start + len - step) % len;
              const Vertex x = walk[pos];
              if (x == b || used[x]) break;
              delta.push_back(x);
              used[x] = 1;
              if (x == cc) {
                if (!seen.insert({{a, b, cc}, delta}).second) break;
                std::vector<Vertex> cycle{a, b, cc};
                cycle.insert(cycle.end(), delta.rbegin() + 1, delta.rend() - 1);
                std::vector<Vertex> ext(delta.begin() + 1, delta.end() - 1);
                for (Vertex v : inner_side(g, cycle)) ext.push_back(v);
                std::sort(ext.begin(), ext.end());
                ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
                for (Vertex v : ext)
                  if (!c.scaffold.has_vertex(v)) superfluous[v] = 1;
                res.spans.push_back({{a, b, cc}, delta, std::move(ext)});
                break;
              }
              if (blocked[x]) break;
            }
          }
        }
      }
    }
  }
  res.g_star = SubgraphRef::empty(g);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (superfluous[v]) res.superfluous.push_back(v);
    else keep.push_back(v);
  }
  res.g_star = SubgraphRef::induced(g, keep);
  Dart od = outer_dart_of(g, res.g_star);
  if (od == kNoDart) {
    res.c_star = sub_outer_vertices(g, res.g_star);
  } else {
    for (Dart d : sub_face_walk(g, res.g_star, od)) res.c_star.push_back(g.tail(d));
  }
  return res;
}

bool check_subneighbors(const Canvas& c) {
  CanvasReport report = validate_canvas(c);
  if (!report.ok()) throw ArgumentError("check_subneighbors needs a valid canvas");
  if (!is_T_critical(c.graph, c.lists, c.scaffold).is_critical) throw ArgumentError("canvas is not critical");
  const PlaneGraph& g = c.graph;
  std::vector<char> near(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (c.scaffold.has_vertex(v) || c.lists[v].size() != 3) continue;
    near[v] = 1;
    for (Vertex u : g.neighbors(v)) near[u] = 1;
  }
  TruncationResult t = truncate(c);
  for (Vertex v : t.superfluous)
    if (!near[v]) return false;
  return true;
}

GrowthProfile growth_profile(const PlaneGraph& g, const ListAssignment& lists, const SubgraphRef& h, Vertex v,
                             bool verify) {
  if (v < 0 || v >= g.num_vertices()) throw ArgumentError("centre outside the graph");
  if (h.has_vertex(v)) throw ArgumentError("centre lies in H");
  if (h.vertex_count() == 0) throw ArgumentError("H is empty");
  if (verify) {
    for (Vertex u = 0; u < g.num_vertices(); ++u)
      if (lists[u].size() < 5) throw ArgumentError("growth profile needs a 5-list-assignment");
    if (!is_T_critical(g, lists, h).is_critical) throw ArgumentError("graph is not H-critical");
  }
  GrowthProfile p;
  p.center = v;
  auto dist = bfs_distances(g, std::span<const Vertex>(&v, 1));
  p.depth = kUnreachable;
  for (Vertex u : h.vertices()) p.depth = std::min(p.depth, dist[u]);
  if (p.depth == kUnreachable) throw ArgumentError("centre is not connected to H");
  p.rings.assign(p.depth + 1, 0);
  for (int d : dist)
    if (d <= p.depth) ++p.rings[d];
  int total = 0;
  p.weak_bound = true;
  p.exponent = std::numeric_limits<double>::infinity();
  for (int r = 0; r <= p.depth; ++r) {
    total += p.rings[r];
    p.balls.push_back(total);
    if (r >= 1) {
      if (p.rings[r] < 2) p.weak_bound = false;
      p.exponent = std::min(p.exponent, std::log2(static_cast<double>(p.rings[r])) / r);
    }
  }
  return p;
}

RatioTable ratio_diagnostics(const std::vector<RatioInput>& corpus) {
  RatioTable table;
  for (const RatioInput& in : corpus) {
    const Canvas& c = in.canvas;
    RatioRow row;
    row.id = in.id;
    row.s_size = c.scaffold.vertex_count();
    row.h_size = row.s_size;
    row.g_size = c.graph.num_vertices();
    row.five_lists = std::all_of(c.lists.lists().begin(), c.lists.lists().end(),
                                 [](ColorSet s) { return s.size() >= 5; });
    for (EdgeId e : chords_of_face(c.graph, c.graph.face(c.graph.outer_face()))) {
      auto [u, v] = c.graph.ends(e);
      if (!c.scaffold.has_vertex(u) && !c.scaffold.has_vertex(v) && c.lists[u].size() <= 3 &&
          c.lists[v].size() <= 3) {
        row.excluded = true;
        row.note = "outer chord " + std::to_string(u) + "-" + std::to_string(v) + " between 3-list vertices";
        break;
      }
    }
    row.g_star_size = truncate(c).g_star.vertex_count();
    if (row.s_size > 0) {
      row.star_ratio = static_cast<double>(row.g_star_size) / row.s_size;
      row.size_ratio = static_cast<double>(row.g_size) / row.h_size;
    }
    if (!row.excluded) {
      table.max_star_ratio = std::max(table.max_star_ratio, row.star_ratio);
      if (row.five_lists) table.max_size_ratio = std::max(table.max_size_ratio, row.size_ratio);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string ratio_csv(const RatioTable& table) {
  std::ostringstream out;
  out << "id,s_size,g_star_size,g_size,h_size,star_ratio,size_ratio,five_lists,excluded,note\n";
  out << std::fixed << std::setprecision(6);
  for (const RatioRow& r : table.rows)
    out << r.id << ',' << r.s_size << ',' << r.g_star_size << ',' << r.g_size << ',' << r.h_size << ','
        << r.star_ratio << ',' << r.size_ratio << ',' << (r.five_lists ? 1 : 0) << ',' << (r.excluded ? 1 : 0) << ','
        << r.note << '\n';
  return out.str();
}

}  // namespace canvas_forge
