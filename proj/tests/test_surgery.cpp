#include "canvas_forge/color_solver.hpp"
#include "canvas_forge/corpus.hpp"
#include "canvas_forge/serialize.hpp"
#include "canvas_forge/surgery.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace canvas_forge;
using support::from_drawing;

namespace {

// 3-lists with one singleton on each listed face, 5-lists elsewhere.
MainInstance face_instance(const PlaneGraph& g, const std::vector<FaceId>& fs) {
  std::vector<ColorSet> ls(g.num_vertices(), ColorSet{0, 1, 2, 3, 4});
  std::vector<std::vector<Vertex>> sets;
  Color c = 0;
  for (FaceId f : fs) {
    const auto& vs = g.face(f).vertices;
    for (Vertex v : vs) ls[v] = ColorSet{0, 1, 2};
    ls[vs[0]] = ColorSet::single(c++ % 3);
    sets.push_back(vs);
  }
  return build_main_instance(g, ListAssignment(ls), sets);
}

// Two interior squares in the middle row of a 3x7 grid, four columns apart.
struct Trace {
  PlaneGraph g;
  std::vector<FaceId> faces;
};

Trace two_squares() {
  PlaneGraph g = shapes::grid(3, 7);
  return {g, {support::face_with_vertices(g, {0, 1, 7, 8}), support::face_with_vertices(g, {5, 6, 12, 13})}};
}

// Three interior squares of a 7x7 grid placed so the tree branches.
Trace three_squares() {
  PlaneGraph g = shapes::grid(7, 7);
  return {g,
          {support::face_with_vertices(g, {10, 11, 17, 18}), support::face_with_vertices(g, {29, 30, 36, 37}),
           support::face_with_vertices(g, {32, 33, 39, 40})}};
}

void check_round_trip(const MainInstance& inst, const SurgeryRun& run) {
  const SurgeryResult& sr = run.result;
  auto phi = solve_main(inst);
  REQUIRE(phi);
  Coloring phi0 = pull_back(sr, *phi);
  CHECK(is_list_coloring(sr.g0, sr.l0, phi0));
  CHECK(push_forward(sr, phi0) == *phi);
  for (Vertex x = 1; x < sr.g0.num_vertices(); ++x) {
    if (sr.rho[x] != sr.rho[x - 1]) continue;
    Coloring broken = phi0;
    broken.assign(x, phi0[x] + 1);
    CHECK_THROWS_AS(push_forward(sr, broken), ArgumentError);
    break;
  }
}

}  // namespace

TEST_CASE("build_apex") {
  SUBCASE("one triangle gives K4") {
    PlaneGraph g = shapes::cycle(3);
    const FaceId inner = g.outer_face() == 0 ? 1 : 0;
    ApexGraph a = build_apex(g, std::vector<FaceId>{inner});
    CHECK(a.graph.num_vertices() == 4);
    CHECK(a.graph.degree(3) == 3);
    CHECK(a.graph.num_faces() == 4);
    CHECK(a.apex == std::vector<Vertex>{3});
  }
  SUBCASE("two disjoint faces") {
    PlaneGraph g = shapes::grid(2, 5);
    FaceId f1 = support::face_with_vertices(g, {0, 1, 5, 6});
    FaceId f2 = support::face_with_vertices(g, {3, 4, 8, 9});
    ApexGraph a = build_apex(g, std::vector<FaceId>{f1, f2});
    CHECK(a.graph.num_vertices() == g.num_vertices() + 2);
    CHECK(a.graph.degree(a.apex[0]) == 4);
    CHECK(a.graph.num_vertices() - a.graph.num_edges() + a.graph.num_faces() == 2);
  }
  SUBCASE("cut vertex on the walk gets one spoke") {
    PlaneGraph g = shapes::star(3);
    ApexGraph a = build_apex(g, std::vector<FaceId>{g.outer_face()});
    CHECK(g.face(g.outer_face()).boundary_walk.size() == 6);
    CHECK(a.graph.degree(a.apex[0]) == 4);
    CHECK(a.graph.num_vertices() - a.graph.num_edges() + a.graph.num_faces() == 2);
    for (Vertex v = 0; v < 4; ++v) CHECK(a.graph.adjacent(v, a.apex[0]));
  }
  SUBCASE("repeated faces are rejected") {
    PlaneGraph g = shapes::cycle(3);
    CHECK_THROWS_AS(build_apex(g, std::vector<FaceId>{0, 0}), ArgumentError);
  }
}

TEST_CASE("cut along a path between two faces") {
  Trace t = two_squares();
  for (FaceId f : t.faces) REQUIRE(f >= 0);
  const PlaneGraph& g = t.g;
  MainInstance inst = face_instance(g, t.faces);
  REQUIRE(inst.certs[0].face_id != inst.certs[1].face_id);
  SurgeryRun run = run_surgery(inst);
  const SurgeryResult& sr = run.result;
  // Apex, five path vertices, apex.
  CHECK(run.tree.tree.edge_count() == 6);
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (run.tree.tree.has_vertex(v)) inner.push_back(v);
  REQUIRE(inner.size() == 5);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const bool on_path = std::find(inner.begin(), inner.end(), v) != inner.end();
    CHECK(sr.copies[v] == (on_path ? 2 : 1));
    int preimages = 0;
    for (Vertex x = 0; x < sr.g0.num_vertices(); ++x) preimages += sr.rho[x] == v;
    CHECK(preimages == sr.copies[v]);
  }
  CHECK(sr.g0.num_vertices() == g.num_vertices() + 5);
  CHECK(sr.g0.num_edges() == g.num_edges() + 4);
  CHECK(check_conservation(g, inst.lists, run).all());
  REQUIRE(sr.seam_copies.size() == 1);
  check_round_trip(inst, run);
  CHECK(validate_canvas({sr.g0, sr.s0, sr.l0}).ok());
}

TEST_CASE("a single face leaves the graph intact") {
  PlaneGraph g = shapes::wheel(5);
  FaceId f = support::face_with_vertices(g, {0, 1, 5});
  MainInstance inst = face_instance(g, {f});
  SurgeryRun run = run_surgery(inst);
  const SurgeryResult& sr = run.result;
  CHECK(run.tree.tree.vertex_count() == 1);
  CHECK(sr.g0.num_vertices() == g.num_vertices());
  CHECK(sr.g0.num_edges() == g.num_edges());
  for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(sr.rho[v] == v);
  std::vector<Vertex> outer = sr.g0.face(sr.f0).vertices;
  CHECK(outer == std::vector<Vertex>{0, 1, 5});
  CHECK(check_conservation(g, inst.lists, run).all());
  check_round_trip(inst, run);
}

TEST_CASE("a degree-3 branch vertex splits into three") {
  Trace t = three_squares();
  for (FaceId f : t.faces) REQUIRE(f >= 0);
  const PlaneGraph& g = t.g;
  MainInstance inst = face_instance(g, t.faces);
  SurgeryRun run = run_surgery(inst);
  const SurgeryResult& sr = run.result;
  int branches = 0, extra = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!run.tree.tree.has_vertex(v)) {
      CHECK(sr.copies[v] == 1);
      continue;
    }
    CHECK(sr.copies[v] == std::max(1, sr.tree_degree[v]));
    branches += sr.tree_degree[v] == 3;
    if (sr.tree_degree[v] == 3) CHECK(sr.copies[v] == 3);
    extra += sr.copies[v] - 1;
  }
  CHECK(branches >= 1);
  CHECK(sr.g0.num_vertices() == g.num_vertices() + extra);
  auto report = check_conservation(g, inst.lists, run);
  CHECK(report.branch_degree_sum);
  CHECK(report.all());
  auto paths = scaffold_as_outer_paths(sr);
  REQUIRE(paths);
  check_round_trip(inst, run);
}

TEST_CASE("surgery on sampled two-face instances") {
  Rng rng(8);
  int done = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto inst = sample_face_instance(2, 3, 6, rng);
    if (!inst) continue;
    ++done;
    SurgeryRun run = run_surgery(*inst);
    const SurgeryResult& sr = run.result;
    auto report = check_conservation(inst->graph, inst->lists, run);
    CHECK(report.all());
    // rho is the identity away from the tree.
    for (Vertex v = 0; v < inst->graph.num_vertices(); ++v)
      if (sr.tree_degree[v] == 0 && !run.tree.tree.has_vertex(v)) CHECK(sr.copies[v] == 1);
    // Edges map to edges.
    for (EdgeId e = 0; e < sr.g0.num_edges(); ++e) {
      auto [x, y] = sr.g0.ends(e);
      CHECK(inst->graph.adjacent(sr.rho[x], sr.rho[y]));
    }
    CHECK(scaffold_as_outer_paths(sr).has_value());
    check_round_trip(*inst, run);
  }
  CHECK(done > 30);
}

TEST_CASE("surgery JSON carries the projection") {
  Trace t = two_squares();
  MainInstance inst = face_instance(t.g, t.faces);
  SurgeryRun run = run_surgery(inst);
  const std::string json = surgery_to_json(run.result);
  CHECK(json.find("\"rho\":[") != std::string::npos);
  CHECK(json == surgery_to_json(run_surgery(main_instance_from_json(main_instance_to_json(inst))).result));
}

TEST_CASE("ledger") {
  CHECK(ledger_csv_header() == "m,D,c1,c2,R,Z,R0,Z0,S0,seams,long_seams,short_seams,long_length_sum,x,D_prime,f_x,f_D_prime");
  PlaneGraph g = shapes::grid(5, 8);
  FaceId a = support::face_with_vertices(g, {0, 1, 8, 9}), b = support::face_with_vertices(g, {30, 31, 38, 39});
  MainInstance inst = face_instance(g, {a, b});
  SurgeryRun run = run_surgery(inst);
  ProofLedger led = build_ledger(inst, run, 720, 1.0, 1.0);
  CHECK(led.m == 2);
  CHECK(led.r_sizes_match);
  CHECK(led.z_size_bound);
  CHECK(led.z0_contains_preimage);
  CHECK(led.d_prime == doctest::Approx(144.0));
  CHECK(led.f_d_prime == doctest::Approx(65357.0));
  CHECK(led.long_seams + led.short_seams == led.seams);
  for (const SeamRecord& s : led.seam_records) CHECK(s.long_seam == (s.length >= 16));
  const std::string row = ledger_csv_row(led);
  CHECK(std::count(row.begin(), row.end(), ',') == 16);
  CHECK(row.rfind("2,720,1,1,", 0) == 0);
}

TEST_CASE("claims") {
  SUBCASE("far-apart faces: the tree colouring succeeds") {
    PlaneGraph g = shapes::grid(5, 8);
    MainInstance inst = face_instance(
        g, {support::face_with_vertices(g, {0, 1, 8, 9}), support::face_with_vertices(g, {30, 31, 38, 39})});
    REQUIRE(inst.min_distance >= 3);
    SurgeryRun run = run_surgery(inst);
    ProofLedger led = build_ledger(inst, run, 720, 1.0, 1.0);
    ClaimsReport rep = check_claims(inst, run, led);
    REQUIRE(rep.s_coloring);
    CHECK(is_list_coloring(g, inst.lists, *rep.s_coloring, &run.result.s));
    for (const ClaimResult& c : rep.claims) CHECK(c.status != ClaimStatus::kFails);
  }
  SUBCASE("Z lower bound on a ladder") {
    PlaneGraph g = shapes::ladder(14);
    MainInstance inst = face_instance(
        g, {support::face_with_vertices(g, {0, 1, 2, 3}), support::face_with_vertices(g, {24, 25, 26, 27})});
    REQUIRE(inst.min_distance >= 4);
    SurgeryRun run = run_surgery(inst);
    ProofLedger led = build_ledger(inst, run, inst.min_distance, 1.0, 1.0);
    ClaimsReport rep = check_claims(inst, run, led);
    auto z = std::find_if(rep.claims.begin(), rep.claims.end(), [](const ClaimResult& c) { return c.name == "ZLower"; });
    REQUIRE(z != rep.claims.end());
    CHECK(z->hypothesis_met);
    CHECK(z->status == ClaimStatus::kHolds);
    CHECK(2 * static_cast<int>(led.z.size()) >= (inst.min_distance - 4) * 2);
  }
  SUBCASE("an internal edge off the face runs the split reduction") {
    // Diamond with outer 4-face: the set is all four vertices, and the
    // diagonal 0-1 is inside the set but not on the face.
    PlaneGraph g = from_drawing({{0, 0}, {1, 0}, {0.5, 1}, {0.5, -1}}, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    std::vector<ColorSet> ls(4, ColorSet{0, 1, 2});
    ls[2] = ColorSet{0};
    MainInstance inst = build_main_instance(g, ListAssignment(ls), {{0, 1, 2, 3}});
    SurgeryRun run = run_surgery(inst);
    ProofLedger led = build_ledger(inst, run, 720, 1.0, 1.0);
    ClaimsReport rep = check_claims(inst, run, led);
    REQUIRE(rep.no_chord_composite);
    CHECK(is_list_coloring(g, inst.lists, *rep.no_chord_composite));
  }
}

TEST_CASE("D inequality") {
  DSolution s = solve_D_inequality(1.0, 1.0);
  CHECK(s.floor_even == 720);
  CHECK(s.d == 720);
  CHECK(s.f_positive);
  CHECK(s.d_prime_bound);
  CHECK(s.f_value == doctest::Approx(65536.0 - 179.0));
  CHECK(s.inequality_threshold == 424);
  // Independent long double evaluation of 2^((D-208)/32) > (D-4)/4 around the threshold.
  auto holds = [](long double d) { return std::exp2((d - 208.0L) / 32.0L) > (d - 4.0L) / 4.0L; };
  CHECK(holds(424));
  CHECK_FALSE(holds(422));
  CHECK(d_inequality_holds(424, 1.0, 1.0));
  CHECK_FALSE(d_inequality_holds(422, 1.0, 1.0));
  CHECK(d_inequality_holds(720, 1.0, 1.0));
  for (long long d = 6; d <= 2000; d += 2) CHECK(d_inequality_holds(d, 1.0, 1.0) == holds(d));

  SUBCASE("monotone on a grid, even, above the floor") {
    long long prev_row = 0;
    for (int a = 0; a < 5; ++a) {
      long long prev = 0;
      for (int b = 0; b < 5; ++b) {
        const double c1 = 1.0 + 0.25 * a, c2 = 1.0 + 0.25 * b;
        DSolution x = solve_D_inequality(c1, c2);
        CHECK(x.d % 2 == 0);
        CHECK(x.d >= x.floor_even);
        CHECK(static_cast<double>(x.floor_even) >= 720.0 * c1 * c2 * c2);
        CHECK(x.f_positive);
        CHECK(x.d >= prev);
        if (b == 0) CHECK(x.d >= prev_row);
        if (b == 0) prev_row = x.d;
        prev = x.d;
      }
    }
  }
  SUBCASE("constants below one are rejected") {
    CHECK_THROWS_AS(solve_D_inequality(0.5, 1.0), ArgumentError);
    CHECK_THROWS_AS(solve_D_inequality(1.0, std::nan("")), ArgumentError);
  }
}
