#include "canvas_forge/enumerate.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "canvas_forge/caps.hpp"

namespace canvas_forge {

namespace {

// Writes the code rooted at `root`; `forward` picks rotation direction. Stops
// early (returning false) once the partial code exceeds `best`.
bool rooted_code(const PlaneGraph& g, Dart root, bool forward, const std::string* best, std::string& out) {
  const int n = g.num_vertices();
  std::vector<int> label(n, -1);
  std::vector<Dart> entry(n, kNoDart);
  std::vector<Vertex> order;
  order.reserve(n);
  out.clear();
  out.push_back(static_cast<char>(n));
  bool tied = best != nullptr;
  auto emit = [&](int value) {
    char c = static_cast<char>(value);
    if (tied) {
      const unsigned char mine = static_cast<unsigned char>(c);
      const unsigned char theirs = static_cast<unsigned char>((*best)[out.size()]);
      if (mine > theirs) return false;
      if (mine < theirs) tied = false;
    }
    out.push_back(c);
    return true;
  };
  if (tied) {
    if (static_cast<unsigned char>(out[0]) > static_cast<unsigned char>((*best)[0])) return false;
    if (out[0] != (*best)[0]) tied = false;
  }
  Vertex r = g.tail(root);
  label[r] = 0;
  entry[r] = root;
  order.push_back(r);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    const int deg = g.degree(v);
    if (!emit(deg)) return false;
    Dart d = entry[v];
    for (int k = 0; k < deg; ++k) {
      Vertex w = g.head(d);
      if (label[w] < 0) {
        label[w] = static_cast<int>(order.size());
        entry[w] = PlaneGraph::twin(d);
        order.push_back(w);
      }
      if (!emit(label[w])) return false;
      d = forward ? g.rot_next(d) : g.rot_prev(d);
    }
  }
  return true;
}

}  // namespace

std::string canonical_code(const PlaneGraph& g, bool respect_outer_face) {
  if (g.num_vertices() > 250) throw ArgumentError("canonical_code supports at most 250 vertices");
  if (!is_connected(g)) throw ArgumentError("canonical_code requires a connected graph");
  if (g.num_edges() == 0) return std::string{static_cast<char>(g.num_vertices()), static_cast<char>(0)};

  std::vector<std::pair<Dart, bool>> roots;
  if (respect_outer_face) {
    for (Dart d : g.face(g.outer_face()).boundary_walk) {
      roots.emplace_back(d, true);
      // Mirror image: the outer face is traversed by the twins.
      roots.emplace_back(PlaneGraph::twin(d), false);
    }
  } else {
    for (Dart d = 0; d < g.num_darts(); ++d) {
      roots.emplace_back(d, true);
      roots.emplace_back(d, false);
    }
  }
  std::string best, scratch;
  bool have = false;
  for (auto [root, forward] : roots) {
    if (rooted_code(g, root, forward, have ? &best : nullptr, scratch)) {
      if (!have || scratch < best) {
        best = scratch;
        have = true;
      }
    }
  }
  return best;
}

PlaneGraph decode_canonical(const std::string& code) {
  if (code.empty()) throw ArgumentError("empty canonical code");
  const int n = static_cast<unsigned char>(code[0]);
  std::vector<std::vector<Vertex>> rot(n);
  std::size_t pos = 1;
  for (int v = 0; v < n; ++v) {
    if (pos >= code.size()) throw ArgumentError("truncated canonical code");
    const int deg = static_cast<unsigned char>(code[pos++]);
    for (int k = 0; k < deg; ++k) {
      if (pos >= code.size()) throw ArgumentError("truncated canonical code");
      rot[v].push_back(static_cast<unsigned char>(code[pos++]));
    }
  }
  if (n == 0 || rot[0].empty()) return PlaneGraph::from_rotation(rot);
  return PlaneGraph::from_rotation_with_outer_dart(rot, 0, rot[0][0]);
}

int enumeration_cap() { return hard_cap(10); }

namespace {

struct Candidate {
  int n;
  int m;
  std::string code;
  friend bool operator<(const Candidate& a, const Candidate& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.m != b.m) return a.m < b.m;
    return a.code < b.code;
  }
};

void insert_after(std::vector<Vertex>& list, Vertex anchor, Vertex value) {
  auto it = std::find(list.begin(), list.end(), anchor);
  list.insert(it + 1, value);
}

// Children obtained by adding a pendant vertex in a corner or an edge across a face.
template <typename Sink>
void expand(const PlaneGraph& g, int n_max, Sink&& sink) {
  const int n = g.num_vertices();
  auto rot = g.rotation();
  if (g.num_edges() == 0) {
    if (n < n_max) sink(PlaneGraph::from_rotation({{1}, {0}}));
    return;
  }
  const Dart outer_ref = g.face(g.outer_face()).boundary_walk.front();
  const Vertex ot = g.tail(outer_ref), oh = g.head(outer_ref);

  if (n < n_max) {
    for (Dart d = 0; d < g.num_darts(); ++d) {
      auto child = rot;
      child.emplace_back(std::vector<Vertex>{g.head(d)});
      insert_after(child[g.head(d)], g.tail(d), n);
      sink(PlaneGraph::from_rotation_with_outer_dart(child, ot, oh));
    }
  }
  for (const Face& f : g.faces()) {
    const auto& walk = f.boundary_walk;
    const bool is_outer = f.id == g.outer_face();
    for (std::size_t i = 0; i < walk.size(); ++i) {
      for (std::size_t j = i + 1; j < walk.size(); ++j) {
        const Dart d1 = walk[i], d2 = walk[j];
        const Vertex h1 = g.head(d1), h2 = g.head(d2);
        if (h1 == h2 || g.adjacent(h1, h2)) continue;
        auto child = rot;
        insert_after(child[h1], g.tail(d1), h2);
        insert_after(child[h2], g.tail(d2), h1);
        if (is_outer) {
          sink(PlaneGraph::from_rotation_with_outer_dart(child, h1, h2));
          sink(PlaneGraph::from_rotation_with_outer_dart(child, h2, h1));
        } else {
          sink(PlaneGraph::from_rotation_with_outer_dart(child, ot, oh));
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> enumerate_plane_graph_codes(int n_max) {
  if (n_max < 0) throw ArgumentError("n_max must be nonnegative");
  if (n_max > enumeration_cap())
    throw ArgumentError("n_max " + std::to_string(n_max) + " exceeds the enumeration cap " +
                        std::to_string(enumeration_cap()));
  std::vector<Candidate> all;
  if (n_max == 0) return {};
  std::vector<std::string> layer{canonical_code(shapes::single_vertex())};
  int m = 0;
  while (!layer.empty()) {
    std::unordered_set<std::string> next;
    for (const auto& code : layer) {
      PlaneGraph g = decode_canonical(code);
      all.push_back({g.num_vertices(), m, code});
      expand(g, n_max, [&](const PlaneGraph& child) { next.insert(canonical_code(child)); });
    }
    layer.assign(next.begin(), next.end());
    std::sort(layer.begin(), layer.end());
    ++m;
  }
  std::sort(all.begin(), all.end());
  std::vector<std::string> codes;
  codes.reserve(all.size());
  for (auto& c : all) codes.push_back(std::move(c.code));
  return codes;
}

void for_each_plane_graph(int n_max, const std::function<void(std::size_t, const PlaneGraph&)>& fn,
                          std::size_t shard, std::size_t num_shards) {
  if (num_shards == 0 || shard >= num_shards) throw ArgumentError("invalid shard selection");
  auto codes = enumerate_plane_graph_codes(n_max);
  for (std::size_t i = shard; i < codes.size(); i += num_shards) fn(i, decode_canonical(codes[i]));
}

std::vector<PlaneGraph> enumerate_plane_graphs(int n_max) {
  std::vector<PlaneGraph> out;
  for_each_plane_graph(n_max, [&](std::size_t, const PlaneGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace canvas_forge
