#include "canvas_forge/steiner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

#include "canvas_forge/caps.hpp"

namespace canvas_forge {

int steiner_terminal_cap() { return hard_cap(8); }

namespace {

struct Back {
  enum Kind : std::uint8_t { kNone, kBase, kSplit, kEdge } kind = kNone;
  int a = -1;  // split: submask; edge: predecessor vertex
  int b = -1;  // edge: edge id
};

std::vector<Vertex> normalized(std::span<const Vertex> vs, int n) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  for (Vertex v : out)
    if (v < 0 || v >= n) throw ArgumentError("terminal outside the graph");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Seam> seams_and_midpoints(const PlaneGraph& g, const SubgraphRef& tree, std::span<const Vertex> terminals) {
  const int n = g.num_vertices();
  std::vector<int> deg(n, 0);
  for (EdgeId e : tree.edges()) {
    auto [a, b] = g.ends(e);
    ++deg[a];
    ++deg[b];
  }
  std::vector<char> key(n, 0);
  for (Vertex v : tree.vertices()) key[v] = deg[v] != 2;
  for (Vertex t : terminals) key[t] = 1;
  std::vector<Seam> seams;
  for (Vertex a : tree.vertices()) {
    if (!key[a]) continue;
    for (Dart d : g.darts_at(a)) {
      if (!tree.has_edge(PlaneGraph::edge_of(d))) continue;
      std::vector<Vertex> path{a, g.head(d)};
      Dart came = d;
      while (!key[path.back()]) {
        Vertex cur = path.back();
        for (Dart x : g.darts_at(cur)) {
          if (x == PlaneGraph::twin(came) || !tree.has_edge(PlaneGraph::edge_of(x))) continue;
          came = x;
          break;
        }
        path.push_back(g.head(came));
      }
      if (path.front() > path.back()) continue;
      Seam s;
      s.length = static_cast<int>(path.size()) - 1;
      s.midpoint = s.length % 2 == 0 ? path[s.length / 2]
                                     : std::min(path[(s.length - 1) / 2], path[(s.length + 1) / 2]);
      s.path = std::move(path);
      seams.push_back(std::move(s));
    }
  }
  std::sort(seams.begin(), seams.end(), [](const Seam& x, const Seam& y) { return x.path < y.path; });
  return seams;
}

SteinerTree make_steiner_tree(const PlaneGraph& g, const SubgraphRef& tree, std::span<const Vertex> terminals) {
  SteinerTree out;
  out.tree = tree;
  out.terminals = normalized(terminals, g.num_vertices());
  out.seams = seams_and_midpoints(g, tree, out.terminals);
  std::vector<int> deg(g.num_vertices(), 0);
  for (EdgeId e : tree.edges()) {
    auto [a, b] = g.ends(e);
    ++deg[a];
    ++deg[b];
  }
  for (Vertex v : tree.vertices())
    if (deg[v] != 2 || std::binary_search(out.terminals.begin(), out.terminals.end(), v))
      out.branch_vertices.push_back(v);
  return out;
}

SteinerTree optimal_steiner(const PlaneGraph& g, std::span<const Vertex> terminals_in,
                            std::span<const Vertex> tiebreak) {
  const int n = g.num_vertices();
  std::vector<Vertex> terminals = normalized(terminals_in, n);
  if (terminals.empty()) throw ArgumentError("optimal_steiner needs at least one terminal");
  const int k = static_cast<int>(terminals.size());
  if (k > steiner_terminal_cap())
    throw ArgumentError(std::to_string(k) + " terminals exceed the Steiner cap " + std::to_string(steiner_terminal_cap()));
  {
    auto dist = bfs_distances(g, std::span<const Vertex>(&terminals[0], 1));
    for (Vertex t : terminals)
      if (dist[t] == kUnreachable) throw ArgumentError("terminals are not connected");
  }
  std::vector<char> in_y(n, 0);
  for (Vertex y : tiebreak) {
    if (y < 0 || y >= n) throw ArgumentError("tie-break vertex outside the graph");
    in_y[y] = 1;
  }
  // Lexicographic (edges, -edges at Y) as one positive weight.
  const std::int64_t big = n + 1;
  auto weight = [&](EdgeId e) {
    auto [a, b] = g.ends(e);
    return big - ((in_y[a] || in_y[b]) ? 1 : 0);
  };
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  const int full = (1 << k) - 1;
  std::vector<std::int64_t> dp(static_cast<std::size_t>(full + 1) * n, inf);
  std::vector<Back> back(dp.size());
  auto at = [n](int mask, Vertex v) { return static_cast<std::size_t>(mask) * n + v; };

  using Item = std::pair<std::int64_t, Vertex>;
  for (int mask = 1; mask <= full; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) == 1) {
      Vertex t = terminals[std::countr_zero(static_cast<unsigned>(mask))];
      dp[at(mask, t)] = 0;
      back[at(mask, t)] = {Back::kBase};
    } else {
      const int low = mask & -mask;
      for (Vertex v = 0; v < n; ++v) {
        for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
          if (!(sub & low)) continue;
          std::int64_t val = dp[at(sub, v)] + dp[at(mask ^ sub, v)];
          if (val < dp[at(mask, v)]) {
            dp[at(mask, v)] = val;
            back[at(mask, v)] = {Back::kSplit, sub};
          }
        }
      }
    }
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (Vertex v = 0; v < n; ++v)
      if (dp[at(mask, v)] < inf) pq.push({dp[at(mask, v)], v});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dp[at(mask, v)]) continue;
      for (Dart x : g.darts_at(v)) {
        Vertex u = g.head(x);
        std::int64_t nd = d + weight(PlaneGraph::edge_of(x));
        if (nd < dp[at(mask, u)]) {
          dp[at(mask, u)] = nd;
          back[at(mask, u)] = {Back::kEdge, v, PlaneGraph::edge_of(x)};
          pq.push({nd, u});
        }
      }
    }
  }

  SubgraphRef tree = SubgraphRef::empty(g);
  std::vector<std::pair<int, Vertex>> stack{{full, terminals[0]}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    tree.add_vertex(v);
    const Back& b = back[at(mask, v)];
    switch (b.kind) {
      case Back::kBase: break;
      case Back::kSplit:
        stack.push_back({b.a, v});
        stack.push_back({mask ^ b.a, v});
        break;
      case Back::kEdge:
        tree.add_edge(g, b.b);
        stack.push_back({mask, b.a});
        break;
      case Back::kNone: throw std::logic_error("Steiner reconstruction reached an unset state");
    }
  }
  if (tree.edge_count() != tree.vertex_count() - 1 || !is_connected(g, tree))
    throw std::logic_error("Steiner reconstruction did not produce a tree");
  return make_steiner_tree(g, tree, terminals);
}

SteinerLemmaReport verify_steiner_lemma(const SteinerTree& t, const PlaneGraph& g) {
  SteinerLemmaReport r;
  const SubgraphRef& h = t.tree;
  r.acyclic = h.vertex_count() >= 1 && h.edge_count() == h.vertex_count() - 1 && is_connected(g, h);
  std::vector<int> deg(g.num_vertices(), 0);
  for (EdgeId e : h.edges()) {
    auto [a, b] = g.ends(e);
    ++deg[a];
    ++deg[b];
  }
  r.leaves_are_terminals = true;
  for (Vertex v : h.vertices())
    if (deg[v] <= 1 && !std::binary_search(t.terminals.begin(), t.terminals.end(), v)) r.leaves_are_terminals = false;
  const int s = static_cast<int>(t.terminals.size());
  r.seam_count = static_cast<int>(t.seams.size());
  r.seam_count_bound = r.seam_count <= 2 * (s - 1);
  auto to_s = bfs_distances(g, t.terminals);
  r.midpoints_far_from_terminals = true;
  for (const Seam& e : t.seams)
    if (to_s[e.midpoint] == kUnreachable || 2LL * to_s[e.midpoint] < e.length - 1)
      r.midpoints_far_from_terminals = false;
  r.midpoints_pairwise_apart = true;
  for (std::size_t i = 0; i < t.seams.size(); ++i) {
    Vertex src = t.seams[i].midpoint;
    auto dist = bfs_distances(g, std::span<const Vertex>(&src, 1));
    for (std::size_t j = i + 1; j < t.seams.size(); ++j) {
      const int d = dist[t.seams[j].midpoint];
      if (d == kUnreachable || 4LL * d < t.seams[i].length + t.seams[j].length - 2) r.midpoints_pairwise_apart = false;
    }
  }
  return r;
}

int steiner_brute_force_edges(const PlaneGraph& g, std::span<const Vertex> terminals_in) {
  const int n = g.num_vertices();
  if (n > 30) throw ArgumentError("brute-force Steiner oracle limited to 30 vertices");
  std::vector<Vertex> terminals = normalized(terminals_in, n);
  if (terminals.empty()) throw ArgumentError("brute-force Steiner oracle needs a terminal");
  std::vector<std::uint32_t> adj(n, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    adj[a] |= 1U << b;
    adj[b] |= 1U << a;
  }
  std::uint32_t base = 0;
  for (Vertex t : terminals) base |= 1U << t;
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (!(base >> v & 1U)) others.push_back(v);
  int best = kUnreachable;
  const std::uint32_t combos = 1U << others.size();
  for (std::uint32_t pick = 0; pick < combos; ++pick) {
    std::uint32_t u = base;
    for (std::size_t i = 0; i < others.size(); ++i)
      if (pick >> i & 1U) u |= 1U << others[i];
    const int size = std::popcount(u);
    if (size - 1 >= best) continue;
    std::uint32_t seen = 1U << terminals[0], frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= u & ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen == u) best = size - 1;
  }
  return best;
}

}  // namespace canvas_forge
