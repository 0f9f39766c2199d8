#include "canvas_forge/canvas.hpp"
#include "canvas_forge/sampling.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace canvas_forge;
using support::lists_of;

namespace {

FaceId inner_triangle(const PlaneGraph& g) { return g.outer_face() == 0 ? 1 : 0; }

// Every path of at most one edge on the face whose vertices can be coloured
// from their lists and whose complement on the face has 3-lists.
std::vector<std::vector<Vertex>> certificate_paths(const PlaneGraph& g, const ListAssignment& l, FaceId f) {
  std::vector<std::vector<Vertex>> out;
  const Face& face = g.face(f);
  std::vector<std::vector<Vertex>> candidates;
  for (Vertex v : face.vertices) candidates.push_back({v});
  for (EdgeId e : face.edges) {
    auto [a, b] = g.ends(e);
    candidates.push_back({a, b});
  }
  for (const auto& p : candidates) {
    bool colourable = p.size() == 1 ? !l[p[0]].empty() : ((l[p[0]] | l[p[1]]).size() >= 2);
    bool rest = true;
    for (Vertex v : face.vertices)
      if (std::find(p.begin(), p.end(), v) == p.end() && l[v].size() < 3) rest = false;
    if (colourable && rest) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("is_restricted_face on a triangle") {
  PlaneGraph g = shapes::cycle(3);
  const FaceId f = inner_triangle(g);
  SUBCASE("adjacent distinct singletons give the edge") {
    auto cert = is_restricted_face(g, lists_of({{1}, {2}, {1, 2, 3}}), f);
    REQUIRE(cert);
    CHECK(cert->special_path == std::vector<Vertex>{0, 1});
    CHECK(cert->path_coloring[0] == 1);
    CHECK(cert->path_coloring[1] == 2);
  }
  SUBCASE("3-lists everywhere give a single vertex") {
    auto cert = is_restricted_face(g, lists_of({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}), f);
    REQUIRE(cert);
    CHECK(cert->special_path.size() == 1);
  }
  SUBCASE("equal singletons on the edge give nothing") {
    const auto l = lists_of({{1}, {1}, {1, 2, 3}});
    CHECK(certificate_paths(g, l, f).empty());
    CHECK_FALSE(is_restricted_face(g, l, f));
  }
}

TEST_CASE("is_restricted_face agrees with path enumeration and is monotone") {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 6));
    PlaneGraph g = random_plane_graph(n, static_cast<int>(uniform_below(rng, 2 * n)), rng);
    std::vector<ColorSet> ls(n);
    for (auto& l : ls) l = random_subset(rng, 5, 1 + static_cast<int>(uniform_below(rng, 3)));
    ListAssignment l(ls);
    for (FaceId f = 0; f < g.num_faces(); ++f) {
      auto cert = is_restricted_face(g, l, f);
      CHECK(cert.has_value() == !certificate_paths(g, l, f).empty());
      if (!cert) continue;
      Coloring c = cert->path_coloring;
      for (Vertex p : cert->special_path) CHECK(l[p].contains(c[p]));
      if (cert->special_path.size() == 2) CHECK(c[cert->special_path[0]] != c[cert->special_path[1]]);
      ListAssignment bigger = l;
      for (Vertex v = 0; v < n; ++v) bigger[v] = bigger[v] | random_subset(rng, 6, 2);
      CHECK(is_restricted_face(g, bigger, f).has_value());
    }
  }
}

TEST_CASE("is_restricted_set") {
  PlaneGraph g = shapes::cycle(3);
  const auto l = lists_of({{1}, {2}, {1, 2, 3}});
  SUBCASE("empty set") { CHECK(is_restricted_set(g, l, std::vector<Vertex>{}).has_value()); }
  SUBCASE("face boundary matches the face test") {
    const FaceId f = inner_triangle(g);
    auto by_set = is_restricted_set(g, l, g.face(f).vertices);
    auto by_face = is_restricted_face(g, l, f);
    REQUIRE(by_set);
    REQUIRE(by_face);
    CHECK(by_set->special_path == by_face->special_path);
    CHECK(by_set->face_contains_set);
  }
  SUBCASE("a 2-list off the path") {
    CHECK_FALSE(is_restricted_set(g, lists_of({{1}, {2}, {1, 2}}), std::vector<Vertex>{0, 1, 2}));
  }
}

TEST_CASE("validate_canvas") {
  PlaneGraph g = shapes::cycle(3);
  SubgraphRef s = path_subgraph(g, std::vector<Vertex>{0, 1});
  SUBCASE("valid path-canvas") {
    auto r = validate_canvas({g, s, lists_of({{1}, {2}, {1, 2, 3}})});
    CHECK(r.ok());
    CHECK(r.path_canvas);
    CHECK(r.scaffold_path == std::vector<Vertex>{0, 1});
  }
  SUBCASE("scaffold without a colouring") {
    auto r = validate_canvas({g, s, lists_of({{1}, {1}, {1, 2, 3}})});
    CHECK(r.violates(CanvasClause::kScaffoldNotColorable));
  }
  SUBCASE("interior 4-list") {
    PlaneGraph w = shapes::wheel(3);  // hub 3 is interior
    Canvas c{w, path_subgraph(w, std::vector<Vertex>{0, 1}), lists_of({{1}, {2}, {1, 2, 3}, {1, 2, 3, 4}})};
    auto r = validate_canvas(c);
    CHECK(r.violates(CanvasClause::kInteriorListTooSmall));
    c.lists[3] = ColorSet{1, 2, 3, 4, 5};
    CHECK(validate_canvas(c).ok());
  }
  SUBCASE("outer 2-list off the scaffold") {
    auto r = validate_canvas({g, s, lists_of({{1}, {2}, {1, 2}})});
    CHECK(r.violates(CanvasClause::kListTooSmall));
  }
  SUBCASE("sampled canvases are valid") {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
      PlaneGraph h = random_plane_graph(2 + static_cast<int>(uniform_below(rng, 8)), 8, rng);
      CHECK(validate_canvas(sample_path_canvas(h, 6, rng)).ok());
    }
  }
}

TEST_CASE("build_main_instance") {
  SUBCASE("one restricted face") {
    PlaneGraph w = shapes::wheel(5);
    std::vector<ColorSet> ls(6, ColorSet{0, 1, 2, 3, 4});
    for (Vertex v = 0; v < 5; ++v) ls[v] = ColorSet{0, 1, 2};
    ls[0] = ColorSet{4};
    auto inst = build_main_instance(w, ListAssignment(ls), {w.face(w.outer_face()).vertices});
    CHECK(inst.min_distance == kUnreachable);
    REQUIRE(inst.certs.size() == 1);
    CHECK(inst.certs[0].special_path == std::vector<Vertex>{0});
  }
  SUBCASE("overlapping sets") {
    PlaneGraph g = shapes::grid(3, 3);
    ListAssignment l(9, ColorSet{0, 1, 2, 3, 4});
    auto inst = build_main_instance(g, l, {{0, 1, 3, 4}, {4, 5, 7, 8}});
    CHECK(inst.min_distance == 0);
  }
  SUBCASE("ladder ends against BFS") {
    for (int rungs = 3; rungs <= 9; ++rungs) {
      PlaneGraph g = shapes::ladder(rungs);
      ListAssignment l(2 * rungs, ColorSet{0, 1, 2, 3, 4});
      std::vector<Vertex> left{0, 1}, right{2 * rungs - 2, 2 * rungs - 1};
      auto inst = build_main_instance(g, l, {left, right});
      auto d = support::floyd(g);
      int expect = kUnreachable;
      for (Vertex a : left)
        for (Vertex b : right) expect = std::min(expect, d[a][b]);
      CHECK(inst.min_distance == expect);
      CHECK(inst.min_distance == rungs - 1);
    }
  }
  SUBCASE("a 2-list in a set is rejected") {
    PlaneGraph g = shapes::cycle(3);
    CHECK_THROWS_AS(build_main_instance(g, lists_of({{1}, {1, 2}, {1, 2}}), {{0, 1, 2}}), ArgumentError);
  }
}
