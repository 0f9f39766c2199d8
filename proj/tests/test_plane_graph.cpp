#include <random>

#include "canvas_forge/enumerate.hpp"
#include "canvas_forge/sampling.hpp"
#include "canvas_forge/serialize.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace canvas_forge;
using support::from_drawing;

namespace {

PlaneGraph diamond() {
  return from_drawing({{0, 0}, {1, 0}, {0.5, 1}, {0.5, -1}}, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

}  // namespace

TEST_CASE("faces of small graphs") {
  SUBCASE("triangle has two faces of length 3") {
    PlaneGraph g = shapes::cycle(3);
    REQUIRE(faces(g).size() == 2);
    for (const Face& f : faces(g)) CHECK(f.boundary_walk.size() == 3);
  }
  SUBCASE("single edge has one face traversing it twice") {
    PlaneGraph g = shapes::path(2);
    REQUIRE(faces(g).size() == 1);
    const auto& walk = faces(g)[0].boundary_walk;
    REQUIRE(walk.size() == 2);
    CHECK(PlaneGraph::edge_of(walk[0]) == PlaneGraph::edge_of(walk[1]));
    CHECK(walk[0] != walk[1]);
  }
  SUBCASE("K4 has four triangular faces") {
    PlaneGraph g = shapes::k4();
    REQUIRE(faces(g).size() == 4);
    std::set<std::vector<Vertex>> sets;
    for (const Face& f : faces(g)) {
      CHECK(f.boundary_walk.size() == 3);
      sets.insert(f.vertices);
    }
    CHECK(sets.size() == 4);  // each triple of K4 bounds exactly one face
  }
  SUBCASE("isolated vertex owns an empty face") {
    PlaneGraph g = shapes::single_vertex();
    REQUIRE(g.num_faces() == 1);
    CHECK(g.face(0).boundary_walk.empty());
  }
}

TEST_CASE("face orbits partition the darts") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 12));
    PlaneGraph g = random_plane_graph(n, static_cast<int>(uniform_below(rng, 2 * n + 1)), rng);
    std::vector<int> hits(g.num_darts(), 0);
    for (const Face& f : faces(g)) {
      for (std::size_t i = 0; i < f.boundary_walk.size(); ++i) {
        const Dart d = f.boundary_walk[i];
        ++hits[d];
        CHECK(g.face_of(d) == f.id);
        CHECK(g.face_next(d) == f.boundary_walk[(i + 1) % f.boundary_walk.size()]);
      }
    }
    for (int h : hits) CHECK(h == 1);
    CHECK(g.num_vertices() - g.num_edges() + g.num_faces() == 2);
  }
}

TEST_CASE("distance") {
  SUBCASE("identity") {
    PlaneGraph g = shapes::path(3);
    std::vector<Vertex> a{1};
    CHECK(distance(g, a, a) == 0);
  }
  SUBCASE("path") {
    PlaneGraph g = shapes::path(3);
    std::vector<Vertex> a{0}, b{2};
    CHECK(distance(g, a, b) == 2);
  }
  SUBCASE("two components") {
    PlaneGraph g = PlaneGraph::from_rotation({{1}, {0}, {3}, {2}});
    std::vector<Vertex> a{0}, b{3};
    CHECK(distance(g, a, b) == kUnreachable);
  }
  SUBCASE("metric on sampled triples, against Floyd-Warshall") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(uniform_below(rng, 10));
      PlaneGraph g = random_plane_graph(n, static_cast<int>(uniform_below(rng, n)), rng);
      auto d = support::floyd(g);
      for (int k = 0; k < 10; ++k) {
        Vertex u = uniform_below(rng, n), v = uniform_below(rng, n), w = uniform_below(rng, n);
        std::vector<Vertex> U{u}, V{v}, W{w};
        CHECK(distance(g, U, V) == d[u][v]);
        CHECK(distance(g, U, V) == distance(g, V, U));
        CHECK(distance(g, U, W) <= distance(g, U, V) + distance(g, V, W));
      }
      std::vector<Vertex> a{0, 1}, b{static_cast<Vertex>(n - 1)};
      CHECK(distance(g, a, b) == std::min(d[0][n - 1], d[1][n - 1]));
    }
  }
}

TEST_CASE("chords_of_face") {
  SUBCASE("4-cycle with a diagonal") {
    PlaneGraph g = diamond();
    auto chords = chords_of_face(g, g.face(g.outer_face()));
    REQUIRE(chords.size() == 1);
    CHECK(g.ends(chords[0]) == std::pair<Vertex, Vertex>{0, 1});
  }
  SUBCASE("triangle face has none") {
    PlaneGraph g = shapes::k4();
    for (const Face& f : g.faces()) CHECK(chords_of_face(g, f).empty());
  }
  SUBCASE("5-wheel rim has none") {
    PlaneGraph g = shapes::wheel(5);
    CHECK(g.face(g.outer_face()).vertices.size() == 5);
    CHECK(chords_of_face(g, g.face(g.outer_face())).empty());
  }
  SUBCASE("chords never lie on the walk") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      PlaneGraph g = random_plane_graph(8, 10, rng);
      for (const Face& f : g.faces()) {
        std::set<EdgeId> walk_edges;
        for (Dart d : f.boundary_walk) walk_edges.insert(PlaneGraph::edge_of(d));
        for (EdgeId e : chords_of_face(g, f)) {
          CHECK(!walk_edges.count(e));
          auto [a, b] = g.ends(e);
          CHECK(std::binary_search(f.vertices.begin(), f.vertices.end(), a));
          CHECK(std::binary_search(f.vertices.begin(), f.vertices.end(), b));
        }
      }
    }
  }
}

TEST_CASE("split_along_edge") {
  SUBCASE("two triangles sharing an edge") {
    PlaneGraph g = diamond();
    auto s = split_along_edge(g, *g.find_edge(0, 1));
    REQUIRE(s);
    CHECK(s->part1.vertices() == std::vector<Vertex>{0, 1, 2});
    CHECK(s->part2.vertices() == std::vector<Vertex>{0, 1, 3});
    CHECK(s->g1.graph.num_edges() == 3);
    CHECK(s->g2.graph.num_edges() == 3);
  }
  SUBCASE("outer edge of a triangle") {
    PlaneGraph g = shapes::cycle(3);
    CHECK_FALSE(split_along_edge(g, 0));
  }
  SUBCASE("two 4-cycles sharing an edge") {
    PlaneGraph g = from_drawing({{0, 0}, {0, 1}, {-1, 1}, {-1, 0}, {1, 1}, {1, 0}},
                                {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 0}});
    auto s = split_along_edge(g, *g.find_edge(0, 1));
    REQUIRE(s);
    CHECK(s->part1.vertices() == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(s->part2.vertices() == std::vector<Vertex>{0, 1, 4, 5});
    CHECK(s->g1.graph.num_faces() == 2);
    CHECK(s->g2.graph.num_faces() == 2);
  }
  SUBCASE("agrees with a separation search and partitions the edges") {
    Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 3 + static_cast<int>(uniform_below(rng, 8));
      PlaneGraph g = random_plane_graph(n, static_cast<int>(uniform_below(rng, 2 * n)), rng);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.ends(e);
        // Components of G - {u, v}.
        std::vector<int> comp(n, -1);
        int comps = 0;
        for (Vertex s = 0; s < n; ++s) {
          if (s == u || s == v || comp[s] >= 0) continue;
          std::vector<Vertex> stack{s};
          comp[s] = comps;
          while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x))
              if (y != u && y != v && comp[y] < 0) comp[y] = comps, stack.push_back(y);
          }
          ++comps;
        }
        auto split = split_along_edge(g, e);
        CHECK(split.has_value() == (comps >= 2));
        if (!split) continue;
        for (Vertex x = 0; x < n; ++x) {
          const bool in1 = split->part1.has_vertex(x), in2 = split->part2.has_vertex(x);
          CHECK((in1 || in2));
          CHECK((in1 && in2) == (x == u || x == v));
        }
        for (EdgeId f = 0; f < g.num_edges(); ++f) {
          const int owners = split->part1.has_edge(f) + split->part2.has_edge(f);
          CHECK(owners == (f == e ? 2 : 1));
        }
      }
    }
  }
}

TEST_CASE("rotation systems that are not plane are rejected") {
  // K3,3-free but wrong rotation: a 4-cycle drawn with crossing order has genus 1? Use K5.
  std::vector<std::vector<Vertex>> k5(5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (a != b) k5[a].push_back(b);
  CHECK_THROWS_AS(PlaneGraph::from_rotation(k5), EmbeddingError);
  CHECK_THROWS_AS(PlaneGraph::from_rotation({{1, 1}, {0, 0}}), EmbeddingError);
  CHECK_THROWS_AS(PlaneGraph::from_rotation({{1}, {}}), EmbeddingError);
}

TEST_CASE("serialization round trip") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    PlaneGraph g = random_plane_graph(1 + static_cast<int>(uniform_below(rng, 9)), 6, rng);
    PlaneGraph h = graph_from_json(graph_to_json(g));
    CHECK(h == g);
    CHECK(graph_to_json(h) == graph_to_json(g));
  }
  CHECK(graph_to_json(shapes::cycle(3)).find("\"n\":3") != std::string::npos);
}
