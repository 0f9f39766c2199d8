#include <cmath>

#include "canvas_forge/corpus.hpp"
#include "canvas_forge/criticality.hpp"
#include "canvas_forge/truncation.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace canvas_forge;
using support::lists_of;

TEST_CASE("truncate") {
  SUBCASE("no small lists anywhere") {
    PlaneGraph w = shapes::wheel(5);
    Canvas c{w, path_subgraph(w, std::vector<Vertex>{0, 1}), ListAssignment(6, ColorSet{0, 1, 2, 3, 4})};
    auto t = truncate(c);
    CHECK(t.spans.empty());
    CHECK(t.superfluous.empty());
    CHECK(t.g_star == SubgraphRef::whole(w));
  }
  SUBCASE("span ends may lie in S") {
    // Singletons on S make 0-hub-1 a span whose walk runs around the rim.
    PlaneGraph w = shapes::wheel(5);
    std::vector<ColorSet> ls(6, ColorSet{0, 1, 2, 3, 4});
    ls[0] = ColorSet{0};
    ls[1] = ColorSet{1};
    Canvas c{w, path_subgraph(w, std::vector<Vertex>{0, 1}), ListAssignment(ls)};
    auto t = truncate(c);
    CHECK(t.superfluous == std::vector<Vertex>{2, 3, 4});
    CHECK(t.g_star.vertices() == std::vector<Vertex>{0, 1, 5});
  }
  SUBCASE("fan behind a 3-vertex span") {
    // Outer walk 0-1-2-3-4 with S = 0-4 edge along the bottom; vertices 1, 3
    // have 3-lists and a fan 5, 6 hangs behind the span 1-2-3 through chord 1-3.
    PlaneGraph g = support::from_drawing(
        {{0, 0}, {0, 2}, {2, 4}, {4, 2}, {4, 0}, {1.6, 2.8}, {2.4, 2.8}},
        {{0, 4}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}, {1, 5}, {5, 2}, {2, 6}, {6, 3}, {5, 6}, {0, 3}});
    std::vector<ColorSet> ls(7, ColorSet{0, 1, 2, 3, 4});
    ls[0] = ColorSet{0};
    ls[4] = ColorSet{1};
    ls[1] = ColorSet{0, 1, 2};
    ls[3] = ColorSet{0, 1, 3};
    ls[2] = ColorSet{0, 1, 2};
    Canvas c{g, path_subgraph(g, std::vector<Vertex>{0, 4}), ListAssignment(ls)};
    REQUIRE(validate_canvas(c).ok());
    auto t = truncate(c);
    for (Vertex v : t.superfluous) CHECK_FALSE(c.scaffold.has_vertex(v));
    CHECK(std::find(t.superfluous.begin(), t.superfluous.end(), 5) != t.superfluous.end());
    CHECK(std::find(t.superfluous.begin(), t.superfluous.end(), 6) != t.superfluous.end());
    CHECK_FALSE(t.g_star.has_vertex(5));
  }
  SUBCASE("superfluous vertices never meet S on random canvases") {
    Rng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
      auto inst = draw_critical_instance(static_cast<CriticalKind>(trial % 2), 9, 6, rng);
      if (!inst) continue;
      Canvas c = critical_canvas(*inst);
      if (!validate_canvas(c).ok()) continue;
      auto t = truncate(c);
      for (Vertex v : t.superfluous) CHECK_FALSE(c.scaffold.has_vertex(v));
      for (Vertex v : c.scaffold.vertices()) CHECK(t.g_star.has_vertex(v));
    }
  }
}

TEST_CASE("essential cutvertices") {
  // Path 0-1-2 as S with pendant triangles would make 1 inessential; S touching
  // both sides makes every cutvertex essential.
  PlaneGraph g = shapes::path(5);
  ListAssignment l(5, ColorSet{0, 1, 2});
  SubgraphRef s = SubgraphRef::empty(g);
  s.add_vertex(0);
  s.add_vertex(4);
  auto cut = essential_cutvertices({g, s, l});
  CHECK(cut == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("check_subneighbors") {
  SUBCASE("no 3-lists off S reduces to G* = G") {
    PlaneGraph g = shapes::cycle(3);
    Canvas c{g, path_subgraph(g, std::vector<Vertex>{0, 1}), lists_of({{1}, {2}, {1, 2, 3, 4, 5}})};
    CHECK_THROWS_AS(check_subneighbors(c), ArgumentError);  // not critical
    c.lists[2] = ColorSet{1, 2};
    // A 2-list on the outer face is not a canvas either.
    CHECK_THROWS_AS(check_subneighbors(c), ArgumentError);
  }
  SUBCASE("critical corpus") {
    Rng rng(12);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
      auto inst = draw_critical_instance(CriticalKind::kPathCanvas3, 9, 6, rng);
      if (!inst) continue;
      Canvas c = critical_canvas(*inst);
      CHECK(check_subneighbors(c));
      ++checked;
    }
    CHECK(checked > 150);
  }
}

TEST_CASE("growth_profile") {
  // Hub 5 inside a 5-cycle T, all lists of size 5, blocked by the rim colouring.
  PlaneGraph w = shapes::wheel(5);
  ListAssignment l(6, ColorSet{0, 1, 2, 3, 4});
  SubgraphRef h = SubgraphRef::induced(w, std::vector<Vertex>{0, 1, 2, 3, 4});
  REQUIRE(is_T_critical(w, l, h).is_critical);
  auto p = growth_profile(w, l, h, 5);
  CHECK(p.depth == 1);
  REQUIRE(p.rings.size() == 2);
  CHECK(p.rings[0] == 1);
  CHECK(p.rings[1] == 5);
  CHECK(p.balls == std::vector<int>{1, 6});
  CHECK(p.weak_bound);
  CHECK(p.exponent == doctest::Approx(std::log2(5.0)));
  CHECK_THROWS_AS(growth_profile(w, l, h, 0), ArgumentError);
  ListAssignment small = l;
  small[5] = ColorSet{0, 1, 2, 3};
  CHECK_THROWS_AS(growth_profile(w, small, h, 5), ArgumentError);
}

TEST_CASE("rings partition the ball, against repeated BFS") {
  Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    PlaneGraph g = random_plane_graph(4 + static_cast<int>(uniform_below(rng, 10)), 8, rng);
    const int n = g.num_vertices();
    ListAssignment l(n, ColorSet{0, 1, 2, 3, 4});
    SubgraphRef h = SubgraphRef::empty(g);
    h.add_vertex(0);
    auto d = support::floyd(g);
    for (Vertex v = 1; v < n; ++v) {
      auto p = growth_profile(g, l, h, v, false);
      CHECK(p.depth == d[v][0]);
      int total = 0;
      for (int r = 0; r <= p.depth; ++r) {
        int ring = 0;
        for (Vertex u = 0; u < n; ++u) ring += d[v][u] == r;
        CHECK(p.rings[r] == ring);
        total += ring;
        CHECK(p.balls[r] == total);
      }
    }
  }
}

TEST_CASE("ratio_diagnostics") {
  CHECK(ratio_diagnostics({}).rows.empty());
  PlaneGraph g = shapes::cycle(3);
  Canvas gadget{g, path_subgraph(g, std::vector<Vertex>{0, 1}), lists_of({{1}, {2}, {1, 2, 3}})};
  auto table = ratio_diagnostics({{"gadget", gadget}});
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].g_size == 3);
  CHECK(table.rows[0].h_size == 2);
  CHECK(table.rows[0].size_ratio == doctest::Approx(1.5));
  // Square with a chord between the two 3-list vertices off S.
  PlaneGraph sq = support::from_drawing({{0, 0}, {2, 0}, {2, 2}, {0, 2}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
  Canvas chorded{sq, path_subgraph(sq, std::vector<Vertex>{0}), lists_of({{1}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}})};
  auto t2 = ratio_diagnostics({{"chord", chorded}});
  REQUIRE(t2.rows.size() == 1);
  CHECK(t2.rows[0].excluded);
  CHECK_FALSE(t2.rows[0].note.empty());
  CHECK(ratio_csv(t2).rfind("id,s_size,g_star_size,g_size,h_size,star_ratio,size_ratio,five_lists,excluded,note\n", 0) == 0);
}
