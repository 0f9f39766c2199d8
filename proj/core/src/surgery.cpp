#include "canvas_forge/surgery.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "canvas_forge/color_solver.hpp"
#include "canvas_forge/criticality.hpp"
#include "json_io.hpp"

namespace canvas_forge {

ApexGraph build_apex(const PlaneGraph& g, std::span<const FaceId> faces) {
  const int n = g.num_vertices();
  std::vector<char> used(g.num_faces(), 0);
  for (FaceId f : faces) {
    if (f < 0 || f >= g.num_faces()) throw ArgumentError("face id out of range");
    if (used[f]) throw ArgumentError("faces must be distinct");
    used[f] = 1;
  }
  std::vector<std::vector<Vertex>> rot = g.rotation();
  rot.resize(n + faces.size());
  ApexGraph out;
  out.faces.assign(faces.begin(), faces.end());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Vertex y = n + static_cast<Vertex>(i);
    out.apex.push_back(y);
    const Face& face = g.face(faces[i]);
    if (face.boundary_walk.empty()) {
      rot[face.vertices.at(0)].push_back(y);
      rot[y] = {face.vertices[0]};
      continue;
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> ring;
    for (Dart d : face.boundary_walk) {
      const Vertex h = g.head(d);
      if (seen[h]) continue;
      seen[h] = 1;
      auto& r = rot[h];
      r.insert(std::find(r.begin(), r.end(), g.tail(d)) + 1, y);
      ring.push_back(h);
    }
    // The corner after tail(d) at head(d) is followed, around y, by the previous spoke.
    rot[y].assign(ring.rbegin(), ring.rend());
  }
  if (g.num_edges() > 0) {
    const Dart d0 = g.face(g.outer_face()).boundary_walk.at(0);
    out.graph = PlaneGraph::from_rotation_with_outer_dart(rot, g.tail(d0), g.head(d0));
  } else {
    out.graph = PlaneGraph::from_rotation(rot);
  }
  return out;
}

namespace {

SubgraphRef map_subgraph(const PlaneGraph& from, const SubgraphRef& sub, const PlaneGraph& to,
                         const std::vector<char>& keep) {
  SubgraphRef out = SubgraphRef::empty(to);
  for (Vertex v : sub.vertices())
    if (keep[v]) out.add_vertex(v);
  for (EdgeId e : sub.edges()) {
    auto [a, b] = from.ends(e);
    if (keep[a] && keep[b]) out.add_edge(to, *to.find_edge(a, b));
  }
  return out;
}

}  // namespace

SurgeryResult cut_along_seams(const PlaneGraph& g, const ListAssignment& lists, const SubgraphRef& path,
                              const ApexGraph& apex, const SteinerTree& h) {
  const PlaneGraph& gp = apex.graph;
  const int n = g.num_vertices();
  const int np = gp.num_vertices();
  const SubgraphRef& tree = h.tree;
  if (tree.host_vertex_count() != np || tree.host_edge_count() != gp.num_edges())
    throw ArgumentError("tree is not a subgraph of the apex graph");
  for (Vertex y : apex.apex)
    if (!tree.has_vertex(y)) throw ArgumentError("tree does not span apex " + std::to_string(y));
  if (tree.edge_count() != tree.vertex_count() - 1 || !is_connected(gp, tree))
    throw ArgumentError("tree is not a tree");
  if (path.host_vertex_count() != n) throw ArgumentError("path is not a subgraph of G");

  std::vector<char> in_y(np, 0);
  for (Vertex y : apex.apex) in_y[y] = 1;

  // Tree darts in rotation order at each vertex; wedge index per dart.
  std::vector<std::vector<Dart>> tree_darts(np);
  std::vector<int> wedge(gp.num_darts(), 0);
  for (Vertex v = 0; v < np; ++v) {
    auto darts = gp.darts_at(v);
    const std::size_t deg = darts.size();
    std::size_t p0 = deg;
    for (std::size_t j = 0; j < deg; ++j)
      if (tree.has_edge(PlaneGraph::edge_of(darts[j]))) {
        p0 = j;
        break;
      }
    if (p0 == deg) continue;
    int w = -1;
    for (std::size_t j = 0; j < deg; ++j) {
      const Dart d = darts[(p0 + j) % deg];
      if (tree.has_edge(PlaneGraph::edge_of(d))) {
        tree_darts[v].push_back(d);
        ++w;
      }
      wedge[d] = w;
    }
  }

  SurgeryResult sr;
  sr.tree_degree.assign(n, 0);
  sr.copies.assign(n, 0);
  std::vector<Vertex> base(np, -1);
  int next = 0;
  for (Vertex v = 0; v < np; ++v) {
    if (in_y[v]) continue;
    const int k = std::max<int>(1, static_cast<int>(tree_darts[v].size()));
    base[v] = next;
    next += k;
    sr.tree_degree[v] = static_cast<int>(tree_darts[v].size());
    sr.copies[v] = k;
    for (int i = 0; i < k; ++i) sr.rho.push_back(v);
  }
  auto copy = [&](Vertex v, int w) { return in_y[v] ? -1 : base[v] + w; };
  auto owner = [&](Dart d) { return copy(gp.tail(d), wedge[d]); };

  std::vector<std::vector<Vertex>> rot(next);
  for (Vertex v = 0; v < np; ++v) {
    if (in_y[v]) continue;
    auto push = [&](std::vector<Vertex>& r, Vertex x) {
      if (x >= 0) r.push_back(x);
    };
    const auto& td = tree_darts[v];
    if (td.empty()) {
      for (Dart d : gp.darts_at(v)) push(rot[base[v]], owner(PlaneGraph::twin(d)));
      continue;
    }
    const int k = static_cast<int>(td.size());
    for (int w = 0; w < k; ++w) {
      auto& r = rot[base[v] + w];
      const Dart first = td[w];
      const Dart last = td[(w + 1) % k];
      push(r, copy(gp.head(first), wedge[gp.rot_prev(PlaneGraph::twin(first))]));
      for (Dart d = gp.rot_next(first); d != last; d = gp.rot_next(d)) push(r, owner(PlaneGraph::twin(d)));
      push(r, copy(gp.head(last), wedge[PlaneGraph::twin(last)]));
    }
  }
  for (Vertex x = 0; x < next; ++x) {
    std::vector<Vertex> sorted = rot[x];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::logic_error("cut produced parallel edges at copy " + std::to_string(x));
  }

  // The opening sits between the last and first entries of any copy of a tree vertex.
  Vertex anchor = -1;
  for (Vertex x = 0; x < next && anchor < 0; ++x)
    if (!tree_darts[sr.rho[x]].empty() && !rot[x].empty()) anchor = x;
  if (anchor >= 0) {
    sr.g0 = PlaneGraph::from_rotation_with_outer_dart(rot, rot[anchor].back(), anchor);
  } else {
    const Face& face = g.face(apex.faces.at(0));
    if (face.boundary_walk.empty()) {
      sr.g0 = PlaneGraph::from_rotation(rot);
    } else {
      const Dart d = face.boundary_walk[0];
      sr.g0 = PlaneGraph::from_rotation_with_outer_dart(rot, base[g.tail(d)], base[g.head(d)]);
    }
  }
  sr.f0 = sr.g0.outer_face();

  std::vector<ColorSet> l0;
  for (Vertex x = 0; x < next; ++x) l0.push_back(lists[sr.rho[x]]);
  sr.l0 = ListAssignment(std::move(l0));

  // S = P ∪ (H - Y), as a subgraph of G.
  std::vector<char> keep(np, 0);
  for (Vertex v = 0; v < n; ++v) keep[v] = 1;
  sr.s = path;
  SubgraphRef tree_in_g = map_subgraph(gp, tree, g, keep);
  sr.s = sr.s.unite(tree_in_g);
  for (EdgeId e : path.edges()) {
    auto [a, b] = g.ends(e);
    if (tree.has_edge(*gp.find_edge(a, b))) sr.path_avoids_tree = false;
  }
  sr.s0 = SubgraphRef::empty(sr.g0);
  for (Vertex x = 0; x < next; ++x)
    if (sr.s.has_vertex(sr.rho[x])) sr.s0.add_vertex(x);
  for (EdgeId e = 0; e < sr.g0.num_edges(); ++e) {
    auto [a, b] = sr.g0.ends(e);
    auto ge = g.find_edge(sr.rho[a], sr.rho[b]);
    if (ge && sr.s.has_edge(*ge)) sr.s0.add_edge(sr.g0, e);
  }

  for (const Seam& seam : h.seams) {
    SeamCopies sc;
    const auto& p = seam.path;
    const Dart d0 = *gp.find_dart(p[0], p[1]);
    sc.left.push_back(copy(p[0], wedge[gp.rot_prev(d0)]));
    sc.right.push_back(copy(p[0], wedge[d0]));
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      const Dart d = *gp.find_dart(p[j], p[j + 1]);
      sc.left.push_back(copy(p[j + 1], wedge[PlaneGraph::twin(d)]));
      sc.right.push_back(copy(p[j + 1], wedge[gp.rot_prev(PlaneGraph::twin(d))]));
    }
    sr.seam_copies.push_back(std::move(sc));
  }
  return sr;
}

SurgeryRun run_surgery(const MainInstance& instance) {
  const PlaneGraph& g = instance.graph;
  if (instance.certs.empty()) throw ArgumentError("surgery needs at least one restricted set");
  std::vector<FaceId> faces;
  SubgraphRef path = SubgraphRef::empty(g);
  for (const RestrictionCert& cert : instance.certs) {
    if (std::find(faces.begin(), faces.end(), cert.face_id) == faces.end()) faces.push_back(cert.face_id);
    path = path.unite(path_subgraph(g, cert.special_path));
  }
  SurgeryRun run;
  run.apex = build_apex(g, faces);
  run.tree = optimal_steiner(run.apex.graph, run.apex.apex, run.apex.apex);
  run.result = cut_along_seams(g, instance.lists, path, run.apex, run.tree);
  return run;
}

Coloring pull_back(const SurgeryResult& sr, const Coloring& phi) {
  Coloring out(sr.g0.num_vertices());
  for (Vertex x = 0; x < sr.g0.num_vertices(); ++x) {
    const Vertex v = sr.rho[x];
    if (v >= phi.size()) throw ArgumentError("colouring does not cover G");
    if (phi.assigned(v)) out.assign(x, phi[v]);
  }
  return out;
}

Coloring push_forward(const SurgeryResult& sr, const Coloring& phi0) {
  if (phi0.size() != sr.g0.num_vertices()) throw ArgumentError("colouring does not cover G0");
  Coloring out(static_cast<int>(sr.copies.size()));
  std::vector<char> seen(sr.copies.size(), 0);
  for (Vertex x = 0; x < phi0.size(); ++x) {
    const Vertex v = sr.rho[x];
    if (!seen[v]) {
      seen[v] = 1;
      if (phi0.assigned(x)) out.assign(v, phi0[x]);
    } else if (out[v] != phi0[x]) {
      throw ArgumentError("fibre of vertex " + std::to_string(v) + " carries two colours");
    }
  }
  return out;
}

std::string surgery_to_json(const SurgeryResult& sr) {
  using detail::Json;
  Json j;
  j["g0"] = detail::graph_json(sr.g0);
  j["rho"] = sr.rho;
  j["lists"] = detail::lists_json(sr.l0);
  j["s0"] = detail::subgraph_json(sr.g0, sr.s0);
  j["f0"] = sr.f0;
  Json seams = Json::array();
  for (const SeamCopies& sc : sr.seam_copies) seams.push_back({{"left", sc.left}, {"right", sc.right}});
  j["seam_copies"] = std::move(seams);
  return j.dump();
}

std::optional<std::vector<std::vector<Vertex>>> scaffold_as_outer_paths(const SurgeryResult& sr) {
  const PlaneGraph& g0 = sr.g0;
  const SubgraphRef& s0 = sr.s0;
  auto labels = component_labels(g0, &s0);
  int ncomp = 0;
  for (int l : labels) ncomp = std::max(ncomp, l + 1);
  std::vector<std::vector<Vertex>> members(ncomp);
  std::vector<int> deg(g0.num_vertices(), 0), edges(ncomp, 0);
  for (Vertex v : s0.vertices()) members[labels[v]].push_back(v);
  for (EdgeId e : s0.edges()) {
    auto [a, b] = g0.ends(e);
    ++deg[a];
    ++deg[b];
    ++edges[labels[a]];
  }
  const std::vector<Dart>& walk = g0.face(sr.f0).boundary_walk;
  const std::size_t len = walk.size();
  std::vector<std::vector<Vertex>> out;
  for (int c = 0; c < ncomp; ++c) {
    const auto& vs = members[c];
    if (edges[c] != static_cast<int>(vs.size()) - 1) return std::nullopt;
    Vertex start = -1;
    for (Vertex v : vs) {
      if (deg[v] > 2) return std::nullopt;
      if (deg[v] <= 1 && start < 0) start = v;
    }
    std::vector<Vertex> seq{start};
    for (Vertex prev = -1, cur = start; seq.size() < vs.size();) {
      for (Dart d : g0.darts_at(cur)) {
        const Vertex nb = g0.head(d);
        if (nb != prev && s0.has_edge(PlaneGraph::edge_of(d))) {
          prev = cur;
          cur = nb;
          break;
        }
      }
      seq.push_back(cur);
    }
    if (seq.size() == 1) {
      if (!g0.on_outer_face(start) && g0.num_vertices() > 1) return std::nullopt;
      out.push_back(seq);
      continue;
    }
    bool found = false;
    for (std::size_t i = 0; i < len && !found; ++i) {
      for (int dir : {1, -1}) {
        bool ok = true;
        for (std::size_t j = 0; j + 1 < seq.size() && ok; ++j) {
          const std::size_t pos = dir > 0 ? (i + j) % len : (i + len - j) % len;
          const Dart d = dir > 0 ? walk[pos] : PlaneGraph::twin(walk[pos]);
          ok = g0.tail(d) == seq[j] && g0.head(d) == seq[j + 1];
        }
        if (ok) {
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
    out.push_back(seq);
  }
  return out;
}

ConservationReport check_conservation(const PlaneGraph& g, const ListAssignment& lists, const SurgeryRun& run) {
  const SurgeryResult& sr = run.result;
  const PlaneGraph& g0 = sr.g0;
  ConservationReport r;
  r.rho_homomorphism = true;
  for (EdgeId e = 0; e < g0.num_edges(); ++e) {
    auto [a, b] = g0.ends(e);
    if (!g.adjacent(sr.rho[a], sr.rho[b])) r.rho_homomorphism = false;
  }
  r.lists_inherited = sr.l0.size() == g0.num_vertices();
  for (Vertex x = 0; r.lists_inherited && x < g0.num_vertices(); ++x)
    r.lists_inherited = sr.l0[x] == lists[sr.rho[x]];
  r.identity_off_tree = true;
  r.copy_counts = true;
  long long extra = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    extra += sr.copies[v] - 1;
    if (!run.tree.tree.has_vertex(v)) {
      if (sr.copies[v] != 1) r.identity_off_tree = false;
    } else if (sr.copies[v] != std::max(1, sr.tree_degree[v])) {
      r.copy_counts = false;
    }
  }
  long long copy_sum = 0, degree_sum = 0;
  for (Vertex v : run.tree.branch_vertices) {
    if (v >= g.num_vertices()) continue;
    copy_sum += sr.copies[v];
    degree_sum += std::max(1, sr.tree_degree[v]);
  }
  r.branch_degree_sum = copy_sum == degree_sum;
  r.vertex_count = g0.num_vertices() == g.num_vertices() + extra;
  r.connected = is_connected(g0);
  r.scaffold_on_outer_face = true;
  for (Vertex x : sr.s0.vertices())
    if (g0.num_vertices() > 1 && !g0.on_outer_face(x)) r.scaffold_on_outer_face = false;
  r.scaffold_paths = scaffold_as_outer_paths(sr).has_value();
  r.canvas_valid = validate_canvas(Canvas{g0, sr.s0, sr.l0}).ok();
  return r;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kHolds: return "holds";
    case ClaimStatus::kFails: return "fails";
    case ClaimStatus::kHypothesisUnmet: return "hypothesis-unmet";
    case ClaimStatus::kSkipped: return "skipped";
  }
  return "?";
}

namespace {

// R: 3-list vertices outside the scaffold; Z: vertices neither in R nor next to it.
void r_and_z(const PlaneGraph& g, const ListAssignment& lists, const SubgraphRef& s, std::vector<Vertex>& r,
             std::vector<Vertex>& z) {
  std::vector<char> near(g.num_vertices(), 0);
  r.clear();
  z.clear();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (s.has_vertex(v) || lists[v].size() != 3) continue;
    r.push_back(v);
    near[v] = 1;
    for (Vertex u : g.neighbors(v)) near[u] = 1;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!near[v]) z.push_back(v);
}

ClaimResult named_claim(std::string name) {
  ClaimResult c;
  c.name = std::move(name);
  return c;
}

double f_of(double y, double c2) { return std::exp2((y - 16.0) / (8.0 * c2)) - (35.0 + y); }

}  // namespace

ProofLedger build_ledger(const MainInstance& instance, const SurgeryRun& run, int distance_parameter, double c1,
                         double c2) {
  const PlaneGraph& g = instance.graph;
  const SurgeryResult& sr = run.result;
  ProofLedger led;
  led.m = static_cast<int>(instance.sets.size());
  led.distance_parameter = distance_parameter;
  led.c1 = c1;
  led.c2 = c2;
  r_and_z(g, instance.lists, sr.s, led.r, led.z);
  r_and_z(sr.g0, sr.l0, sr.s0, led.r0, led.z0);
  led.s0_size = sr.s0.vertex_count();

  std::vector<char> in_z(g.num_vertices(), 0), in_z0(sr.g0.num_vertices(), 0);
  for (Vertex v : led.z) in_z[v] = 1;
  for (Vertex x : led.z0) in_z0[x] = 1;
  led.z0_contains_preimage = true;
  led.z0_equals_preimage = true;
  for (Vertex x = 0; x < sr.g0.num_vertices(); ++x) {
    if (in_z[sr.rho[x]] && !in_z0[x]) led.z0_contains_preimage = false;
    if (in_z[sr.rho[x]] != in_z0[x]) led.z0_equals_preimage = false;
  }
  led.r_sizes_match = led.r.size() == led.r0.size();
  led.z_size_bound = led.z.size() <= led.z0.size();

  const auto& seams = run.tree.seams;
  led.seams = static_cast<int>(seams.size());
  for (const Seam& e : seams) {
    SeamRecord rec;
    rec.length = e.length;
    rec.midpoint = e.midpoint;
    rec.long_seam = e.length >= 16;
    if (rec.long_seam) {
      ++led.long_seams;
      led.long_length_sum += e.length;
      rec.radius = (e.length - 16 + 3) / 4;
      if (e.midpoint < g.num_vertices()) {
        auto dist = bfs_distances(g, std::span<const Vertex>(&e.midpoint, 1));
        rec.ring_in_z = true;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
          if (dist[v] <= rec.radius) {
            ++rec.ring_size;
            if (!in_z[v]) rec.ring_in_z = false;
          }
      }
    } else {
      ++led.short_seams;
    }
    led.seam_records.push_back(rec);
  }
  const auto& recs = led.seam_records;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (!recs[i].long_seam) continue;
    std::vector<int> dist;
    if (recs[i].midpoint < g.num_vertices())
      dist = bfs_distances(g, std::span<const Vertex>(&recs[i].midpoint, 1));
    for (std::size_t j = i + 1; j < recs.size(); ++j) {
      if (!recs[j].long_seam) continue;
      const int rsum = recs[i].radius + recs[j].radius;
      led.clause4_separates_rings = false;
      if (4LL * rsum >= recs[i].length + recs[j].length - 2) led.clause5_separates_rings = false;
      if (dist.empty() || recs[j].midpoint >= g.num_vertices()) continue;
      if (dist[recs[j].midpoint] <= rsum) led.long_rings_disjoint = false;
    }
  }
  if (led.long_seams > 0) {
    led.x = static_cast<double>(led.long_length_sum) / led.long_seams;
    led.f_x = f_of(*led.x, c2);
  }
  led.d_prime = (distance_parameter - 4.0) / (4.0 * c1) - 35.0;
  led.f_d_prime = f_of(led.d_prime, c2);
  return led;
}

std::string ledger_csv_header() {
  return "m,D,c1,c2,R,Z,R0,Z0,S0,seams,long_seams,short_seams,long_length_sum,x,D_prime,f_x,f_D_prime";
}

std::string ledger_csv_row(const ProofLedger& l) {
  std::ostringstream out;
  out << std::setprecision(10);
  out << l.m << ',' << l.distance_parameter << ',' << l.c1 << ',' << l.c2 << ',' << l.r.size() << ','
      << l.z.size() << ',' << l.r0.size() << ',' << l.z0.size() << ',' << l.s0_size << ',' << l.seams << ','
      << l.long_seams << ',' << l.short_seams << ',' << l.long_length_sum << ',';
  if (l.x) out << *l.x;
  out << ',' << l.d_prime << ',';
  if (l.f_x) out << *l.f_x;
  out << ',' << l.f_d_prime;
  return out.str();
}

std::optional<Coloring> color_scaffold_tree(const MainInstance& instance, const SurgeryResult& sr) {
  const PlaneGraph& g = instance.graph;
  const SubgraphRef& s = sr.s;
  const int n = g.num_vertices();
  Coloring phi(n);
  std::vector<char> on_path(n, 0);
  for (const RestrictionCert& cert : instance.certs)
    for (Vertex v : cert.special_path) {
      on_path[v] = 1;
      if (phi.assigned(v) && phi[v] != cert.path_coloring[v]) return std::nullopt;
      phi.assign(v, cert.path_coloring[v]);
    }
  auto allowed = [&](Vertex v) {
    ColorSet out = instance.lists[v];
    for (Dart d : g.darts_at(v))
      if (s.has_edge(PlaneGraph::edge_of(d)) && phi.assigned(g.head(d))) out.erase(phi[g.head(d)]);
    return out;
  };
  for (Vertex root : s.vertices()) {
    if (phi.assigned(root)) continue;
    std::vector<Vertex> queue{root};
    ColorSet a = allowed(root);
    if (a.empty()) return std::nullopt;
    phi.assign(root, a.min());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Dart d : g.darts_at(queue[i])) {
        const Vertex u = g.head(d);
        if (!s.has_edge(PlaneGraph::edge_of(d)) || on_path[u] || phi.assigned(u)) continue;
        ColorSet b = allowed(u);
        if (b.empty()) return std::nullopt;
        phi.assign(u, b.min());
        queue.push_back(u);
      }
    }
  }
  if (!is_list_coloring(g, instance.lists, phi, &s)) return std::nullopt;
  return phi;
}

namespace {

ClaimResult no_chord_claim(const MainInstance& inst, std::optional<Coloring>& composite, bool colorable) {
  const PlaneGraph& g = inst.graph;
  ClaimResult c = named_claim("NoChord");
  c.hypothesis_met = !colorable;
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    const Face& face = g.face(inst.certs[i].face_id);
    std::vector<char> in_x(g.num_vertices(), 0);
    for (Vertex v : inst.sets[i]) in_x[v] = 1;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = g.ends(e);
      if (!in_x[u] || !in_x[v] || std::binary_search(face.edges.begin(), face.edges.end(), e)) continue;
      c.note = "set " + std::to_string(i) + " has edge " + std::to_string(u) + "-" + std::to_string(v) +
               " off its face";
      auto split = split_along_edge(g, e);
      if (!split) {
        c.status = ClaimStatus::kFails;
        c.note += "; the edge does not separate G";
        return c;
      }
      // The side holding more special-path vertices is coloured first.
      auto weight = [&](const SubgraphRef& part) {
        int w = 0;
        for (const RestrictionCert& cert : inst.certs)
          for (Vertex p : cert.special_path) w += part.has_vertex(p);
        return w;
      };
      const bool swap = weight(split->part2) > weight(split->part1);
      const SubgraphRef& g1 = swap ? split->part2 : split->part1;
      const SubgraphRef& g2 = swap ? split->part1 : split->part2;
      auto phi1 = solve_exhaustive(g, inst.lists, Coloring(g.num_vertices()), &g1);
      std::optional<Coloring> phi;
      if (phi1) {
        Coloring fixed(g.num_vertices());
        fixed.assign(u, (*phi1)[u]);
        fixed.assign(v, (*phi1)[v]);
        auto phi2 = solve_exhaustive(g, inst.lists, fixed, &g2);
        if (phi2) {
          Coloring joined = *phi1;
          for (Vertex x : g2.vertices()) joined.assign(x, (*phi2)[x]);
          if (is_list_coloring(g, inst.lists, joined)) phi = joined;
        }
      }
      if (phi) {
        composite = phi;
        c.status = c.hypothesis_met ? ClaimStatus::kFails : ClaimStatus::kHypothesisUnmet;
        c.note += "; split-and-recolour produced a colouring";
      } else {
        c.status = ClaimStatus::kFails;
        c.note += "; split-and-recolour failed";
      }
      return c;
    }
  }
  c.status = ClaimStatus::kHolds;
  return c;
}

ClaimResult z_lower_claim(const MainInstance& inst, const ProofLedger& led) {
  const PlaneGraph& g = inst.graph;
  ClaimResult c = named_claim("ZLower");
  const int m = static_cast<int>(inst.sets.size());
  const int d = inst.min_distance;
  c.hypothesis_met = m >= 2 && d != kUnreachable && d >= 4;
  if (!c.hypothesis_met) {
    c.status = ClaimStatus::kHypothesisUnmet;
    c.note = "needs m >= 2 and finite distance >= 4";
    return c;
  }
  std::vector<int> owner(g.num_vertices(), -1);
  for (int i = 0; i < m; ++i)
    for (Vertex v : inst.sets[i]) owner[v] = i;
  std::vector<char> in_z(g.num_vertices(), 0), used(g.num_vertices(), 0);
  for (Vertex v : led.z) in_z[v] = 1;
  const int last = (d - 2) / 2;
  bool ok = true;
  for (int i = 0; i < m && ok; ++i) {
    // BFS from X_i until another set is reached; walk back along parents.
    std::vector<int> dist(g.num_vertices(), kUnreachable);
    std::vector<Vertex> parent(g.num_vertices(), -1), queue;
    for (Vertex v : inst.sets[i]) {
      dist[v] = 0;
      queue.push_back(v);
    }
    Vertex hit = -1;
    for (std::size_t q = 0; q < queue.size() && hit < 0; ++q)
      for (Vertex u : g.neighbors(queue[q])) {
        if (dist[u] != kUnreachable) continue;
        dist[u] = dist[queue[q]] + 1;
        parent[u] = queue[q];
        queue.push_back(u);
        if (owner[u] >= 0 && owner[u] != i) {
          hit = u;
          break;
        }
      }
    if (hit < 0) {
      ok = false;
      c.note = "set " + std::to_string(i) + " reaches no other set";
      break;
    }
    std::vector<Vertex> q_path;
    for (Vertex x = hit; x >= 0; x = parent[x]) q_path.push_back(x);
    std::reverse(q_path.begin(), q_path.end());
    for (int j = 2; j <= last && j < static_cast<int>(q_path.size()); ++j) {
      const Vertex x = q_path[j];
      if (!in_z[x] || used[x]) {
        ok = false;
        c.note = "shortest-path vertex " + std::to_string(x) + (used[x] ? " is shared" : " is outside Z");
        break;
      }
      used[x] = 1;
    }
  }
  const bool bound = 2LL * static_cast<long long>(led.z.size()) >= static_cast<long long>(d - 4) * m;
  if (ok && !bound) c.note = "|Z| below (D - 4) m / 2";
  c.status = ok && bound ? ClaimStatus::kHolds : ClaimStatus::kFails;
  return c;
}

}  // namespace

ClaimsReport check_claims(const MainInstance& instance, const SurgeryRun& run, const ProofLedger& ledger,
                          std::uint64_t criticality_budget) {
  const SurgeryResult& sr = run.result;
  ClaimsReport out;
  const bool colorable = solve_main(instance).has_value();

  ClaimResult no_chord = no_chord_claim(instance, out.no_chord_composite, colorable);
  out.claims.push_back(no_chord);
  out.claims.push_back(z_lower_claim(instance, ledger));

  ClaimResult s0c = named_claim("S0Colorable");
  s0c.hypothesis_met = instance.min_distance >= 3;
  out.s_coloring = color_scaffold_tree(instance, sr);
  bool lifted = false;
  if (out.s_coloring) {
    Coloring phi0 = pull_back(sr, *out.s_coloring);
    lifted = is_list_coloring(sr.g0, sr.l0, phi0.restricted_to(sr.s0), &sr.s0);
  }
  if (lifted) s0c.status = ClaimStatus::kHolds;
  else s0c.status = s0c.hypothesis_met ? ClaimStatus::kFails : ClaimStatus::kHypothesisUnmet;
  if (!out.s_coloring) s0c.note = "tree procedure ran out of colours";
  out.claims.push_back(s0c);

  ClaimResult crit = named_claim("T0Critical");
  crit.hypothesis_met = !colorable;
  const std::uint64_t count =
      count_colorings(sr.g0, sr.l0, Coloring(sr.g0.num_vertices()), &sr.s0, criticality_budget + 1);
  if (count > criticality_budget) {
    crit.status = ClaimStatus::kSkipped;
    crit.note = "more than " + std::to_string(criticality_budget) + " scaffold colourings";
  } else if (is_T_critical(sr.g0, sr.l0, sr.s0).is_critical) {
    crit.status = ClaimStatus::kHolds;
  } else {
    crit.status = crit.hypothesis_met ? ClaimStatus::kFails : ClaimStatus::kHypothesisUnmet;
  }
  out.claims.push_back(crit);

  ClaimResult t0nc = named_claim("T0NoChord");
  t0nc.hypothesis_met = no_chord.status == ClaimStatus::kHolds && !colorable;
  t0nc.status = ClaimStatus::kHolds;
  for (EdgeId e : chords_of_face(sr.g0, sr.g0.face(sr.f0))) {
    auto [u, v] = sr.g0.ends(e);
    if (sr.s0.has_vertex(u) || sr.s0.has_vertex(v) || sr.l0[u].size() > 3 || sr.l0[v].size() > 3) continue;
    t0nc.status = t0nc.hypothesis_met ? ClaimStatus::kFails : ClaimStatus::kHypothesisUnmet;
    t0nc.note = "chord " + std::to_string(u) + "-" + std::to_string(v) + " of the outer face";
    break;
  }
  out.claims.push_back(t0nc);
  return out;
}

}  // namespace canvas_forge
