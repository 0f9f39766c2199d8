#include "canvas_forge/color_solver.hpp"

#include <algorithm>

#include "canvas_forge/serialize.hpp"

namespace canvas_forge {

namespace {

class Backtracker {
 public:
  Backtracker(const PlaneGraph& g, const ListAssignment& lists, const Coloring& fixed, const SubgraphRef* within)
      : lists_(lists), color_(g.num_vertices(), kNoColor), nbrs_(g.num_vertices()) {
    const int n = g.num_vertices();
    if (lists.size() != n || fixed.size() != n) throw ArgumentError("lists and colouring must cover every vertex");
    if (within && (within->host_vertex_count() != n || within->host_edge_count() != g.num_edges()))
      throw ArgumentError("subgraph mask does not match the graph");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (within && !within->has_edge(e)) continue;
      auto [a, b] = g.ends(e);
      nbrs_[a].push_back(b);
      nbrs_[b].push_back(a);
    }
    for (Vertex v = 0; v < n; ++v) {
      if (within && !within->has_vertex(v)) continue;
      if (fixed.assigned(v)) {
        if (!lists[v].contains(fixed[v]))
          throw ArgumentError("fixed colour of vertex " + std::to_string(v) + " is not in its list");
        color_[v] = fixed[v];
      } else {
        free_.push_back(v);
      }
    }
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : nbrs_[v])
        if (color_[v] != kNoColor && color_[v] == color_[u])
          throw ArgumentError("fixed colouring is improper at edge " + std::to_string(v) + "-" + std::to_string(u));
  }

  std::optional<Coloring> solve() {
    if (!consistent()) return std::nullopt;
    if (!search(static_cast<int>(free_.size()))) return std::nullopt;
    Coloring out(static_cast<int>(color_.size()));
    for (Vertex v = 0; v < out.size(); ++v)
      if (color_[v] != kNoColor) out.assign(v, color_[v]);
    return out;
  }

  std::uint64_t count(std::uint64_t limit) {
    limit_ = limit;
    counted_ = 0;
    if (consistent()) tally(static_cast<int>(free_.size()));
    return counted_;
  }

 private:
  ColorSet available(Vertex v) const {
    ColorSet s = lists_[v];
    for (Vertex u : nbrs_[v])
      if (color_[u] != kNoColor) s.erase(color_[u]);
    return s;
  }

  bool consistent() const {
    return std::all_of(free_.begin(), free_.end(), [&](Vertex v) { return !available(v).empty(); });
  }

  // Smallest remaining domain, ties broken by index (free_ is ascending).
  Vertex pick(ColorSet& domain) const {
    Vertex best = -1;
    int best_size = kMaxColors + 1;
    for (Vertex v : free_) {
      if (color_[v] != kNoColor) continue;
      ColorSet s = available(v);
      if (s.size() < best_size) {
        best = v;
        best_size = s.size();
        domain = s;
        if (best_size <= 1) break;
      }
    }
    return best;
  }

  bool neighbours_alive(Vertex v) const {
    for (Vertex u : nbrs_[v])
      if (color_[u] == kNoColor && available(u).empty()) return false;
    return true;
  }

  bool search(int remaining) {
    if (remaining == 0) return true;
    ColorSet domain;
    Vertex v = pick(domain);
    for (Color c : domain) {
      color_[v] = c;
      if (neighbours_alive(v) && search(remaining - 1)) return true;
    }
    color_[v] = kNoColor;
    return false;
  }

  void tally(int remaining) {
    if (counted_ >= limit_) return;
    if (remaining == 0) {
      ++counted_;
      return;
    }
    ColorSet domain;
    Vertex v = pick(domain);
    for (Color c : domain) {
      color_[v] = c;
      if (neighbours_alive(v)) tally(remaining - 1);
      if (counted_ >= limit_) break;
    }
    color_[v] = kNoColor;
  }

  const ListAssignment& lists_;
  std::vector<Color> color_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Vertex> free_;
  std::uint64_t limit_ = 0;
  std::uint64_t counted_ = 0;
};

// The classical recursion on induced subgraphs K of the canvas graph, given by
// a vertex mask. Invariants: K is connected, the precoloured vertices of K are
// exactly P (at most two adjacent vertices on the outer face of K), vertices
// inside the outer face of K keep their original lists (size >= 5) and other
// vertices of K outside P have lists of size >= 3.
class ThomassenRun {
 public:
  ThomassenRun(const PlaneGraph& g, const ListAssignment& lists) : g_(g), lists_(lists), color_(g.num_vertices()) {}

  Coloring run(const std::vector<Vertex>& path, const Coloring& path_coloring) {
    for (Vertex v : path) color_.assign(v, path_coloring[v]);
    Mask all(static_cast<std::size_t>(g_.num_vertices()), 1);
    solve(std::move(all), path.size() > 0 ? path[0] : -1, path.size() > 1 ? path[1] : -1);
    return color_;
  }

 private:
  using Mask = std::vector<char>;

  bool present(const Mask& in, Dart d) const { return in[g_.tail(d)] && in[g_.head(d)]; }

  Dart next_in(const Mask& in, Dart d) const {
    Dart x = g_.rot_next(PlaneGraph::twin(d));
    while (!present(in, x)) x = g_.rot_next(x);
    return x;
  }

  // Closed dart walk of the face of K that contains the host outer face.
  std::vector<Dart> outer_walk(const Mask& in) const {
    std::vector<char> reached(static_cast<std::size_t>(g_.num_faces()), 0);
    std::vector<FaceId> queue{g_.outer_face()};
    reached[g_.outer_face()] = 1;
    Dart start = kNoDart;
    for (std::size_t i = 0; i < queue.size() && start == kNoDart; ++i) {
      for (Dart d : g_.face(queue[i]).boundary_walk) {
        if (present(in, d)) {
          start = d;
          break;
        }
        FaceId f = g_.face_of(PlaneGraph::twin(d));
        if (!reached[f]) {
          reached[f] = 1;
          queue.push_back(f);
        }
      }
    }
    std::vector<Dart> walk;
    if (start == kNoDart) return walk;
    Dart x = start;
    do {
      walk.push_back(x);
      x = next_in(in, x);
    } while (x != start);
    return walk;
  }

  // Smallest cut vertex of K, or -1.
  Vertex cut_vertex(const Mask& in, Vertex root) const {
    const std::size_t n = in.size();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    int timer = 0;
    struct Frame {
      Vertex v;
      Vertex parent;
      std::size_t next;
      int children;
    };
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto darts = g_.darts_at(f.v);
      if (f.next < darts.size()) {
        Vertex w = g_.head(darts[f.next++]);
        if (!in[w] || w == f.parent) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[done.v] = 1;
        break;
      }
      Frame& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (up.parent >= 0 && low[done.v] >= disc[up.v]) is_cut[up.v] = 1;
    }
    for (std::size_t v = 0; v < n; ++v)
      if (is_cut[v]) return static_cast<Vertex>(v);
    return -1;
  }

  // Vertices of K - removed reachable from `seed`.
  Mask component(const Mask& in, const Mask& removed, Vertex seed) const {
    Mask comp(in.size(), 0);
    std::vector<Vertex> queue{seed};
    comp[seed] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Dart d : g_.darts_at(queue[i])) {
        Vertex w = g_.head(d);
        if (in[w] && !removed[w] && !comp[w]) {
          comp[w] = 1;
          queue.push_back(w);
        }
      }
    return comp;
  }

  [[noreturn]] void fail(const std::string& why) const { throw std::logic_error(why); }

  void solve(Mask in, Vertex p1, Vertex p2) {
    int count = 0;
    Vertex first = -1;
    for (std::size_t v = 0; v < in.size(); ++v)
      if (in[v]) {
        if (first < 0) first = static_cast<Vertex>(v);
        ++count;
      }
    if (count == 1) {
      if (!color_.assigned(first)) color_.assign(first, lists_[first].min());
      return;
    }
    std::vector<Dart> walk = outer_walk(in);
    if (p1 < 0) {
      p1 = g_.num_vertices();
      for (Dart d : walk) p1 = std::min(p1, g_.tail(d));
      color_.assign(p1, lists_[p1].min());
    }
    if (p2 < 0) {
      p2 = g_.num_vertices();
      for (Dart d : walk)
        if (g_.tail(d) == p1) p2 = std::min(p2, g_.head(d));
      ColorSet options = lists_[p2] - ColorSet::single(color_[p1]);
      if (options.empty()) fail("no colour left for the second path vertex");
      color_.assign(p2, options.min());
    }
    if (count == 2) return;

    if (Vertex cut = cut_vertex(in, p1); cut >= 0) {
      Mask removed(in.size(), 0);
      removed[cut] = 1;
      Mask side = component(in, removed, cut == p1 ? p2 : p1);
      Mask k1 = side, k2 = in;
      k1[cut] = 1;
      for (std::size_t v = 0; v < in.size(); ++v)
        if (side[v]) k2[v] = 0;
      solve(std::move(k1), p1, p2);
      solve(std::move(k2), cut, -1);
      return;
    }

    // K is 2-connected, so its outer walk is a cycle.
    Mask on_cycle(in.size(), 0);
    std::vector<char> cycle_edge(static_cast<std::size_t>(g_.num_edges()), 0);
    for (Dart d : walk) {
      on_cycle[g_.tail(d)] = 1;
      cycle_edge[PlaneGraph::edge_of(d)] = 1;
    }
    EdgeId chord = -1;
    for (EdgeId e = 0; e < g_.num_edges() && chord < 0; ++e) {
      auto [a, b] = g_.ends(e);
      if (!cycle_edge[e] && in[a] && in[b] && on_cycle[a] && on_cycle[b]) chord = e;
    }
    if (chord >= 0) {
      auto [u, v] = g_.ends(chord);
      Mask removed(in.size(), 0);
      removed[u] = removed[v] = 1;
      Vertex seed = -1;
      if (p1 != u && p1 != v) seed = p1;
      else if (p2 != u && p2 != v) seed = p2;
      else
        for (std::size_t x = 0; x < in.size() && seed < 0; ++x)
          if (in[x] && !removed[x]) seed = static_cast<Vertex>(x);
      Mask side = component(in, removed, seed);
      Mask k1 = side, k2 = in;
      k1[u] = k1[v] = 1;
      for (std::size_t x = 0; x < in.size(); ++x)
        if (side[x]) k2[x] = 0;
      solve(std::move(k1), p1, p2);
      solve(std::move(k2), u, v);
      return;
    }

    // No chord: delete the cycle neighbour w of p1 that is not p2.
    Vertex w = -1;
    const std::size_t len = walk.size();
    for (std::size_t i = 0; i < len && w < 0; ++i) {
      Dart d = walk[i];
      if (g_.tail(d) == p1 && g_.head(d) == p2) w = g_.tail(walk[(i + len - 1) % len]);
      if (g_.tail(d) == p2 && g_.head(d) == p1) w = g_.head(walk[(i + 1) % len]);
    }
    if (w < 0) fail("path edge is not on the outer cycle");
    ColorSet avail = lists_[w] - ColorSet::single(color_[p1]);
    const Color x = avail.min();
    const Color y = (avail - ColorSet::single(x)).min();
    if (y == kNoColor) fail("fewer than two colours to reserve at the deleted vertex");
    const ColorSet reserved{x, y};
    for (Dart d : g_.darts_at(w)) {
      Vertex u = g_.head(d);
      if (in[u] && !on_cycle[u]) lists_[u] = lists_[u] - reserved;
    }
    Mask rest = in;
    rest[w] = 0;
    solve(std::move(rest), p1, p2);
    ColorSet usable = reserved;
    for (Dart d : g_.darts_at(w)) {
      Vertex u = g_.head(d);
      if (in[u] && color_.assigned(u)) usable.erase(color_[u]);
    }
    if (usable.empty()) fail("both reserved colours are blocked at the deleted vertex");
    color_.assign(w, usable.min());
  }

  const PlaneGraph& g_;
  ListAssignment lists_;
  Coloring color_;
};

}  // namespace

std::optional<Coloring> solve_exhaustive(const PlaneGraph& g, const ListAssignment& lists, const Coloring& fixed,
                                         const SubgraphRef* within) {
  return Backtracker(g, lists, fixed, within).solve();
}

std::uint64_t count_colorings(const PlaneGraph& g, const ListAssignment& lists, const Coloring& fixed,
                              const SubgraphRef* within, std::uint64_t limit) {
  return Backtracker(g, lists, fixed, within).count(limit);
}

bool extends(const PlaneGraph& g, const ListAssignment& lists, const SubgraphRef& t, const Coloring& phi,
             const SubgraphRef* within) {
  if (!t.valid(g)) throw ArgumentError("T is not a subgraph of the graph");
  if (phi.size() != g.num_vertices()) throw ArgumentError("colouring size does not match the graph");
  if (!is_list_coloring(g, lists, phi, &t)) throw ArgumentError("phi is not an L-colouring of T");
  Coloring fixed = phi.restricted_to(t);
  // Edges outside T between vertices of T may already clash.
  const SubgraphRef* scope = within;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (scope && !scope->has_edge(e)) continue;
    auto [a, b] = g.ends(e);
    if (fixed.assigned(a) && fixed[a] == fixed[b]) return false;
  }
  return solve_exhaustive(g, lists, fixed, within).has_value();
}

Coloring solve_thomassen(const Canvas& c) {
  CanvasReport report = validate_canvas(c);
  if (!report.ok()) {
    std::string why = "invalid canvas:";
    for (const auto& v : report.violations) why += " " + to_string(v.clause);
    throw ArgumentError(why);
  }
  if (!report.path_canvas) throw ArgumentError("scaffold is not a path along the outer walk");
  if (report.scaffold_path.size() > 2) throw ArgumentError("scaffold path has more than two vertices");
  Coloring out;
  try {
    out = ThomassenRun(c.graph, c.lists).run(report.scaffold_path, *report.scaffold_coloring);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ArgumentError*>(&e)) throw;
    throw ThomassenFailure(std::string("recursion failed: ") + e.what(), canvas_to_json(c));
  }
  if (!is_list_coloring(c.graph, c.lists, out))
    throw ThomassenFailure("recursion produced an improper or off-list colouring", canvas_to_json(c));
  return out;
}

std::optional<Coloring> solve_main(const MainInstance& instance) {
  return solve_exhaustive(instance.graph, instance.lists, Coloring(instance.graph.num_vertices()));
}

}  // namespace canvas_forge
