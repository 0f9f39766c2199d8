#include "canvas_forge/enumerate.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace canvas_forge;

TEST_CASE("enumeration base cases") {
  auto one = enumerate_plane_graphs(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].num_vertices() == 1);
  auto two = enumerate_plane_graphs(2);
  REQUIRE(two.size() == 2);
  CHECK(two[1].num_vertices() == 2);
  CHECK(two[1].num_edges() == 1);
}

TEST_CASE("enumeration counts match generate-and-filter") {
  for (int n = 1; n <= 5; ++n) {
    const auto codes = enumerate_plane_graph_codes(n);
    const auto smaller = n > 1 ? enumerate_plane_graph_codes(n - 1).size() : 0;
    CAPTURE(n);
    CHECK(static_cast<int>(codes.size() - smaller) == support::count_plane_graphs(n));
  }
  CHECK(enumerate_plane_graph_codes(4).size() == 12);
}

TEST_CASE("enumerated graphs are connected, plane and pairwise distinct") {
  const auto codes = enumerate_plane_graph_codes(6);
  std::set<std::string> distinct(codes.begin(), codes.end());
  CHECK(distinct.size() == codes.size());
  for (const auto& code : codes) {
    PlaneGraph g = decode_canonical(code);
    CHECK(is_connected(g));
    CHECK(g.num_vertices() - g.num_edges() + g.num_faces() == 2);
    CHECK(canonical_code(g) == code);
  }
}

TEST_CASE("canonical code ignores labels and mirror images") {
  // The same triangle with a pendant inside, relabelled and reflected.
  PlaneGraph a = support::from_drawing({{0, 0}, {4, 0}, {2, 4}, {2, 1}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  PlaneGraph b = support::from_drawing({{-2, 1}, {0, 0}, {-4, 0}, {-2, 4}}, {{1, 2}, {2, 3}, {3, 1}, {1, 0}});
  CHECK(canonical_code(a) == canonical_code(b));
  // Moving the pendant outside changes the marked outer face.
  PlaneGraph c = support::from_drawing({{0, 0}, {4, 0}, {2, 4}, {-2, -1}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  CHECK(canonical_code(a) != canonical_code(c));
  CHECK(canonical_code(a, false) == canonical_code(c, false));
}

TEST_CASE("sharded streaming covers the enumeration once") {
  std::vector<int> hits(enumerate_plane_graph_codes(5).size(), 0);
  for (std::size_t shard = 0; shard < 3; ++shard)
    for_each_plane_graph(5, [&](std::size_t i, const PlaneGraph&) { ++hits[i]; }, shard, 3);
  for (int h : hits) CHECK(h == 1);
}
