#pragma once

// Shared fixtures and brute-force oracles. Nothing here calls the solver,
// enumeration or Steiner code of the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "canvas_forge/canvas.hpp"
#include "canvas_forge/coloring.hpp"
#include "canvas_forge/plane_graph.hpp"

namespace support {

using namespace canvas_forge;

struct Point {
  double x, y;
};

/// Straight-line drawing to rotation system (counter-clockwise by angle). The
/// outer face is the one occupying the downward wedge at the lowest vertex.
inline PlaneGraph from_drawing(const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<Vertex>> rot(n);
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) {
      return std::atan2(pts[a].y - pts[v].y, pts[a].x - pts[v].x) <
             std::atan2(pts[b].y - pts[v].y, pts[b].x - pts[v].x);
    });
  }
  if (edges.empty()) return PlaneGraph::from_rotation(rot);
  int low = 0;
  for (int v = 1; v < n; ++v)
    if (std::make_pair(pts[v].y, pts[v].x) < std::make_pair(pts[low].y, pts[low].x)) low = v;
  return PlaneGraph::from_rotation_with_outer_dart(rot, low, rot[low].front());
}

/// Inner face whose vertex set is exactly `vs` (sorted), or -1.
inline FaceId face_with_vertices(const PlaneGraph& g, std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  for (FaceId f = 0; f < g.num_faces(); ++f)
    if (f != g.outer_face() && g.face(f).vertices == vs) return f;
  return -1;
}

inline ListAssignment lists_of(std::initializer_list<std::initializer_list<Color>> ls) {
  std::vector<ColorSet> out;
  for (auto l : ls) out.emplace_back(l);
  return ListAssignment(std::move(out));
}

inline std::vector<std::pair<Vertex, Vertex>> edge_list(const PlaneGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) out.push_back(g.ends(e));
  return out;
}

// --- colouring oracles ------------------------------------------------------

/// Walks the full product of the lists (fixed vertices pinned) and counts
/// proper assignments, stopping at `limit`.
inline std::uint64_t product_count(const PlaneGraph& g, const ListAssignment& lists, const Coloring& fixed,
                                   std::uint64_t limit = ~0ULL) {
  const int n = g.num_vertices();
  std::vector<std::vector<Color>> choice(n);
  for (Vertex v = 0; v < n; ++v) {
    if (fixed.size() == n && fixed.assigned(v)) choice[v] = {fixed[v]};
    else
      for (Color c : lists[v]) choice[v].push_back(c);
    if (choice[v].empty()) return 0;
  }
  const auto edges = edge_list(g);
  std::vector<std::size_t> idx(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (auto [a, b] : edges)
      if (choice[a][idx[a]] == choice[b][idx[b]]) {
        ok = false;
        break;
      }
    if (ok && ++count >= limit) return count;
    int v = 0;
    while (v < n && ++idx[v] == choice[v].size()) idx[v++] = 0;
    if (v == n) return count;
  }
}

inline bool product_colorable(const PlaneGraph& g, const ListAssignment& lists, const Coloring& fixed = {}) {
  return product_count(g, lists, fixed, 1) > 0;
}

// --- metric oracle ----------------------------------------------------------

inline std::vector<std::vector<int>> floyd(const PlaneGraph& g) {
  const int n = g.num_vertices();
  const int inf = kUnreachable / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [a, b] : edge_list(g)) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = kUnreachable;
  return d;
}

// --- Steiner oracle ---------------------------------------------------------

/// Minimum edge count of a connected subgraph containing the terminals, by
/// depth-first search over vertex subsets in increasing size.
inline int steiner_oracle(const PlaneGraph& g, const std::vector<Vertex>& terminals) {
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [a, b] : edge_list(g)) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto connected = [&](const std::vector<char>& in) {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{terminals[0]};
    seen[terminals[0]] = 1;
    int reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v])
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == std::count(in.begin(), in.end(), 1);
  };
  std::vector<Vertex> free;
  std::vector<char> is_t(n, 0);
  for (Vertex t : terminals) is_t[t] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (!is_t[v]) free.push_back(v);
  const int k = static_cast<int>(std::count(is_t.begin(), is_t.end(), 1));
  for (int extra = 0; extra <= static_cast<int>(free.size()); ++extra) {
    std::vector<char> pick(free.size(), 0);
    std::fill(pick.end() - extra, pick.end(), 1);
    do {
      std::vector<char> in = is_t;
      for (std::size_t i = 0; i < free.size(); ++i)
        if (pick[i]) in[free[i]] = 1;
      if (connected(in)) return k + extra - 1;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return kUnreachable;
}

// --- embedded-graph count oracle -------------------------------------------

/// Counts connected plane graphs with n vertices and a marked outer face, up
/// to isomorphism that may reverse orientation. Generates every labelled
/// graph, every rotation system, keeps genus 0, and deduplicates by the
/// minimum relabelled key over all vertex permutations and both orientations.
inline int count_plane_graphs(int n) {
  if (n == 1) return 1;
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.push_back({a, b});
  using Key = std::pair<std::vector<std::vector<int>>, std::vector<std::pair<int, int>>>;
  std::set<Key> seen;
  std::vector<int> perm(n);
  for (std::uint32_t mask = 1; mask < (1U << all.size()); ++mask) {
    std::vector<std::vector<int>> nb(n);
    int m = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1U) {
        nb[all[i].first].push_back(all[i].second);
        nb[all[i].second].push_back(all[i].first);
        ++m;
      }
    {
      std::vector<int> comp(n, 0), stack{0};
      comp[0] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : nb[v])
          if (!comp[w]) comp[w] = 1, stack.push_back(w);
      }
      if (std::count(comp.begin(), comp.end(), 1) != n) continue;
    }
    // All rotation systems: each vertex's neighbours with the first one pinned.
    std::vector<std::vector<int>> rot = nb;
    std::function<void(int)> rec = [&](int v) {
      if (v == n) {
        auto next_at = [&](int at, int from) {
          const auto& r = rot[at];
          auto it = std::find(r.begin(), r.end(), from);
          ++it;
          return it == r.end() ? r.front() : *it;
        };
        std::map<std::pair<int, int>, int> face_of;
        std::vector<std::vector<std::pair<int, int>>> faces;
        for (int u = 0; u < n; ++u)
          for (int w : rot[u]) {
            if (face_of.count({u, w})) continue;
            std::vector<std::pair<int, int>> walk;
            std::pair<int, int> d{u, w};
            while (!face_of.count(d)) {
              face_of[d] = static_cast<int>(faces.size());
              walk.push_back(d);
              d = {d.second, next_at(d.second, d.first)};
            }
            faces.push_back(walk);
          }
        if (n - m + static_cast<int>(faces.size()) != 2) return;
        for (const auto& outer : faces) {
          Key best;
          bool first = true;
          std::iota(perm.begin(), perm.end(), 0);
          do {
            for (int flip = 0; flip < 2; ++flip) {
              Key k;
              k.first.assign(n, {});
              for (int u = 0; u < n; ++u) {
                std::vector<int> r;
                for (int w : rot[u]) r.push_back(perm[w]);
                if (flip) std::reverse(r.begin(), r.end());
                std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
                k.first[perm[u]] = r;
              }
              for (auto [a, b] : outer) k.second.push_back(flip ? std::make_pair(perm[b], perm[a]) : std::make_pair(perm[a], perm[b]));
              std::sort(k.second.begin(), k.second.end());
              if (first || k < best) best = k, first = false;
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
          seen.insert(best);
        }
        return;
      }
      if (rot[v].size() <= 2) return rec(v + 1);
      std::sort(rot[v].begin() + 1, rot[v].end());
      do rec(v + 1);
      while (std::next_permutation(rot[v].begin() + 1, rot[v].end()));
    };
    rec(0);
  }
  return static_cast<int>(seen.size());
}

}  // namespace support
