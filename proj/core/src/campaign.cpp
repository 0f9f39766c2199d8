#include "canvas_forge/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "canvas_forge/caps.hpp"
#include "canvas_forge/color_solver.hpp"
#include "canvas_forge/corpus.hpp"
#include "canvas_forge/criticality.hpp"
#include "canvas_forge/enumerate.hpp"
#include "canvas_forge/sampling.hpp"
#include "canvas_forge/serialize.hpp"
#include "canvas_forge/steiner.hpp"
#include "canvas_forge/surgery.hpp"
#include "canvas_forge/truncation.hpp"
#include "json_io.hpp"

namespace canvas_forge {

using detail::Json;

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

namespace {

struct Outcome {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> records;
  std::vector<std::string> rows;
  std::map<std::string, long long> counts;
  std::map<std::string, double> minima;
  std::map<std::string, double> maxima;

  void fail(Json record) {
    ++failures;
    record["status"] = "failure";
    records.push_back(record.dump());
  }
};

struct Aggregate {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> records;
  std::vector<std::string> rows;
  std::map<std::string, long long> counts;
  std::map<std::string, double> minima;
  std::map<std::string, double> maxima;
};

Aggregate combine(std::vector<Outcome>& outcomes) {
  Aggregate a;
  for (Outcome& o : outcomes) {
    a.checked += o.checked;
    a.failures += o.failures;
    a.skipped += o.skipped;
    for (auto& r : o.records) a.records.push_back(std::move(r));
    for (auto& r : o.rows) a.rows.push_back(std::move(r));
    for (auto& [k, v] : o.counts) a.counts[k] += v;
    for (auto& [k, v] : o.minima) a.minima[k] = a.minima.count(k) ? std::min(a.minima[k], v) : v;
    for (auto& [k, v] : o.maxima) a.maxima[k] = a.maxima.count(k) ? std::max(a.maxima[k], v) : v;
  }
  return a;
}

std::string fixed6(double x) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(6);
  out << x;
  return out.str();
}

Json header_json(const CampaignConfig& c) {
  Json j;
  j["suite"] = c.suite;
  j["seed"] = c.seed;
  j["n_max"] = c.n_max;
  j["palette"] = c.palette;
  j["samples"] = c.samples;
  j["c1"] = c.c1;
  j["c2"] = c.c2;
  if (c.distance) j["distance"] = *c.distance;
  else j["distance"] = nullptr;
  return j;
}

SuiteResult finish(const CampaignConfig& c, Aggregate&& a, std::vector<std::pair<std::string, std::string>> extra,
                   const std::string& csv_header) {
  SuiteResult r;
  r.suite = c.suite;
  r.instances = a.checked;
  r.failures = a.failures;
  r.skipped = a.skipped;
  r.summary.push_back({"instances", std::to_string(a.checked)});
  r.summary.push_back({"failures", std::to_string(a.failures)});
  r.summary.push_back({"skipped", std::to_string(a.skipped)});
  for (auto& [k, v] : a.counts) r.summary.push_back({k, std::to_string(v)});
  for (auto& [k, v] : a.minima) r.summary.push_back({"min_" + k, fixed6(v)});
  for (auto& [k, v] : a.maxima) r.summary.push_back({"max_" + k, fixed6(v)});
  for (auto& kv : extra) r.summary.push_back(std::move(kv));

  std::string body = Json{{"header", header_json(c)}}.dump() + "\n";
  for (const auto& rec : a.records) body += rec + "\n";
  Json summary = Json::object();
  for (const auto& [k, v] : r.summary) summary[k] = v;
  body += Json{{"summary", summary}}.dump() + "\n";
  r.jsonl = std::move(body);
  if (!csv_header.empty()) {
    r.csv = csv_header + "\n";
    for (const auto& row : a.rows) r.csv += row + "\n";
  }
  return r;
}

// --- thomassen-verify / restricted-face-verify ------------------------------

SuiteResult run_thomassen(const CampaignConfig& c) {
  const auto codes = enumerate_plane_graph_codes(c.n_max);
  std::vector<Outcome> out(codes.size());
  parallel_for(codes.size(), c.jobs, [&](std::size_t i) {
    Outcome& o = out[i];
    const PlaneGraph g = decode_canonical(codes[i]);
    Rng rng(instance_seed(c.seed, i));
    for (std::uint64_t s = 0; s < c.samples; ++s) {
      Canvas canvas = sample_path_canvas(g, c.palette, rng);
      ++o.checked;
      Json rec{{"graph_index", i}, {"sample", s}};
      try {
        Coloring phi = solve_thomassen(canvas);
        if (!is_list_coloring(g, canvas.lists, phi)) {
          rec["reason"] = "improper or off-list colouring";
          rec["canvas"] = detail::canvas_json(canvas);
          o.fail(rec);
        } else if (!solve_exhaustive(g, canvas.lists, Coloring(g.num_vertices()))) {
          rec["reason"] = "exhaustive oracle found no colouring";
          rec["canvas"] = detail::canvas_json(canvas);
          o.fail(rec);
        }
      } catch (const ThomassenFailure& e) {
        rec["reason"] = e.what();
        rec["canvas"] = Json::parse(e.instance_json());
        o.fail(rec);
      } catch (const std::exception& e) {
        rec["reason"] = e.what();
        rec["canvas"] = detail::canvas_json(canvas);
        o.fail(rec);
      }
    }
  });
  Aggregate a = combine(out);
  a.counts["graphs"] = static_cast<long long>(codes.size());
  return finish(c, std::move(a), {}, "");
}

SuiteResult run_restricted_face(const CampaignConfig& c) {
  const auto codes = enumerate_plane_graph_codes(c.n_max);
  std::vector<Outcome> out(codes.size());
  parallel_for(codes.size(), c.jobs, [&](std::size_t i) {
    Outcome& o = out[i];
    const PlaneGraph g = decode_canonical(codes[i]);
    Rng rng(instance_seed(c.seed, i));
    for (std::uint64_t s = 0; s < c.samples; ++s) {
      FaceInstance fi = sample_restricted_face(g, c.palette, rng);
      ++o.checked;
      Json rec{{"graph_index", i},
               {"sample", s},
               {"graph", detail::graph_json(g)},
               {"face", fi.face},
               {"special_path", fi.special_path},
               {"lists", detail::lists_json(fi.lists)}};
      try {
        if (!is_restricted_face(g, fi.lists, fi.face)) {
          rec["reason"] = "sampled face is not restricted";
          o.fail(rec);
          continue;
        }
        if (!solve_exhaustive(g, fi.lists, Coloring(g.num_vertices()))) {
          rec["reason"] = "graph with a restricted face is not colourable";
          o.fail(rec);
          continue;
        }
        PlaneGraph gf = g.with_outer_face(fi.face);
        Canvas canvas{gf, path_subgraph(gf, fi.special_path), fi.lists};
        if (!validate_canvas(canvas).ok()) {
          rec["reason"] = "re-embedded face does not give a valid path-canvas";
          o.fail(rec);
          continue;
        }
        if (!is_list_coloring(gf, fi.lists, solve_thomassen(canvas))) {
          rec["reason"] = "re-embedded Thomassen colouring is invalid";
          o.fail(rec);
        }
      } catch (const std::exception& e) {
        rec["reason"] = e.what();
        o.fail(rec);
      }
    }
  });
  Aggregate a = combine(out);
  a.counts["graphs"] = static_cast<long long>(codes.size());
  return finish(c, std::move(a), {}, "");
}

// --- steiner-lemma -----------------------------------------------------------

std::vector<Vertex> random_vertices(Rng& rng, int n, int k) {
  ColorSet picked = random_subset(rng, n, k);
  return picked.to_vector();
}

SuiteResult run_steiner(const CampaignConfig& c) {
  std::vector<Outcome> out(c.samples);
  parallel_for(c.samples, c.jobs, [&](std::size_t i) {
    Outcome& o = out[i];
    Rng rng(instance_seed(c.seed, i));
    const int n = 2 + static_cast<int>(uniform_below(rng, c.n_max - 1));
    PlaneGraph g = random_plane_graph(n, static_cast<int>(uniform_below(rng, 2 * n + 1)), rng);
    const int k = 1 + static_cast<int>(uniform_below(rng, std::min(4, n)));
    std::vector<Vertex> terminals = random_vertices(rng, n, k);
    std::vector<Vertex> tiebreak;
    if (uniform_below(rng, 2)) tiebreak = random_vertices(rng, n, 1 + static_cast<int>(uniform_below(rng, n)));
    ++o.checked;
    Json rec{{"index", i}, {"graph", detail::graph_json(g)}, {"terminals", terminals}, {"tiebreak", tiebreak}};
    try {
      SteinerTree t = optimal_steiner(g, terminals, tiebreak);
      const int brute = steiner_brute_force_edges(g, terminals);
      SteinerLemmaReport rep = verify_steiner_lemma(t, g);
      o.counts["seams"] += rep.seam_count;
      if (t.tree.edge_count() != brute || !rep.all()) {
        rec["dp_edges"] = t.tree.edge_count();
        rec["brute_edges"] = brute;
        rec["clauses"] = {rep.acyclic, rep.leaves_are_terminals, rep.seam_count_bound,
                          rep.midpoints_far_from_terminals, rep.midpoints_pairwise_apart};
        rec["reason"] = t.tree.edge_count() != brute ? "edge count differs from brute force" : "lemma clause fails";
        o.fail(rec);
      }
    } catch (const std::exception& e) {
      rec["reason"] = e.what();
      o.fail(rec);
    }
  });
  return finish(c, combine(out), {}, "");
}

// --- criticality-lemmas ------------------------------------------------------

const char* kind_name(CriticalKind k) {
  switch (k) {
    case CriticalKind::kTight: return "tight";
    case CriticalKind::kPathCanvas3: return "path3";
    case CriticalKind::kFiveList: return "five";
  }
  return "?";
}

std::optional<CriticalInstance> draw_critical(CriticalKind kind, const CampaignConfig& c, Rng& rng) {
  return draw_critical_instance(kind, c.n_max, c.palette, rng);
}

Json critical_json(const CriticalInstance& inst) {
  Json j;
  j["host"] = detail::graph_json(inst.host);
  j["lists"] = detail::lists_json(inst.lists);
  j["t"] = detail::subgraph_json(inst.host, inst.t);
  j["critical"] = detail::subgraph_json(inst.host, inst.critical);
  j["phi"] = detail::coloring_json(inst.phi);
  return j;
}

SuiteResult run_criticality(const CampaignConfig& c) {
  std::vector<Outcome> out(c.samples);
  parallel_for(c.samples, c.jobs, [&](std::size_t i) {
    Outcome& o = out[i];
    Rng rng(instance_seed(c.seed, i));
    const CriticalKind kind = static_cast<CriticalKind>(i % 3);
    auto inst = draw_critical(kind, c, rng);
    if (!inst) {
      ++o.skipped;
      return;
    }
    ++o.checked;
    o.counts[std::string("kind_") + kind_name(kind)] += 1;
    const Json instance = critical_json(*inst);
    const std::string hash = content_hash(instance.dump());
    Json rec{{"index", i}, {"hash", hash}, {"kind", kind_name(kind)}};
    std::vector<std::string> problems;
    try {
      const PlaneGraph& g = inst->host;
      CriticalityReport rep = is_T_critical(g, inst->lists, inst->t, inst->critical);
      if (!rep.is_critical) problems.push_back("extracted subgraph is not critical");
      else if (!verify_witnesses(g, inst->lists, inst->t, inst->critical, rep)) problems.push_back("witness re-check fails");
      for (EdgeId e : inst->critical.edges()) {
        if (inst->t.has_edge(e)) continue;
        SubgraphRef smaller = inst->critical;
        smaller.remove_edge(e);
        if (!extends(g, inst->lists, inst->t, inst->phi, &smaller)) {
          problems.push_back("edge " + std::to_string(e) + " can be deleted without losing the obstruction");
          break;
        }
      }
      for (const CutSplit& split : enumerate_cut_splits(g, inst->t, inst->critical, 2, 12)) {
        try {
          if (!check_critical_cut(g, inst->lists, inst->t, split.g1, split.g2)) problems.push_back("cut lemma fails on a split");
          o.counts["splits"] += 1;
        } catch (const ArgumentError&) {
          o.counts["splits_rejected"] += 1;
        }
      }
      for (int k = 0; k < 3; ++k) {
        SubgraphRef mid = sample_intermediate(*inst, rng);
        o.counts["intermediates"] += 1;
        if (!is_T_critical(g, inst->lists, mid, inst->critical).is_critical)
          problems.push_back("not critical for an intermediate subgraph");
      }
      if (kind == CriticalKind::kPathCanvas3) {
        Canvas canvas = critical_canvas(*inst);
        auto path = scaffold_path(canvas);
        if (!path) {
          problems.push_back("3-path scaffold is not an outer path");
        } else {
          o.counts["bellows"] += 1;
          if (!check_bellows_lists(canvas.graph, canvas.lists, *path, SubgraphRef::whole(canvas.graph)))
            problems.push_back("bellows list sizes fail");
        }
      }
      rec["critical_vertices"] = inst->critical.vertex_count();
      rec["critical_edges"] = inst->critical.edge_count();
      rec["witnesses"] = rep.witnesses.size();
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    if (problems.empty()) {
      rec["status"] = "ok";
      o.records.push_back(rec.dump());
    } else {
      rec["reason"] = problems;
      rec["instance"] = instance;
      o.fail(rec);
    }
  });
  return finish(c, combine(out), {}, "");
}

// --- surgery-roundtrip -------------------------------------------------------

int d_parameter(const CampaignConfig& c) {
  if (c.distance) return *c.distance;
  return static_cast<int>(solve_D_inequality(c.c1, c.c2).d);
}

SuiteResult run_surgery_suite(const CampaignConfig& c) {
  const int d_param = d_parameter(c);
  std::vector<Outcome> out(c.samples);
  parallel_for(c.samples, c.jobs, [&](std::size_t i) {
    Outcome& o = out[i];
    Rng rng(instance_seed(c.seed, i));
    auto inst = sample_face_instance(2, 3, c.palette, rng);
    if (!inst) {
      ++o.skipped;
      return;
    }
    ++o.checked;
    const std::string instance_text = main_instance_to_json(*inst);
    const std::string hash = content_hash(instance_text);
    Json rec{{"index", i}, {"hash", hash}};
    std::vector<std::string> problems;
    try {
      const PlaneGraph& g = inst->graph;
      SurgeryRun run = run_surgery(*inst);
      const SurgeryResult& sr = run.result;
      ConservationReport cons = check_conservation(g, inst->lists, run);
      if (!cons.all()) problems.push_back("conservation invariant fails");
      if (!verify_steiner_lemma(run.tree, run.apex.graph).all()) problems.push_back("tree violates the seam lemma");
      if (!sr.path_avoids_tree) problems.push_back("tree uses a special-path edge");

      std::optional<Coloring> phi = solve_main(*inst);
      Coloring base(g.num_vertices());
      if (phi) base = *phi;
      else
        for (Vertex v = 0; v < g.num_vertices(); ++v) base.assign(v, inst->lists[v].min());
      Coloring phi0 = pull_back(sr, base);
      if (!(push_forward(sr, phi0) == base) || !(pull_back(sr, push_forward(sr, phi0)) == phi0))
        problems.push_back("pull_back and push_forward are not inverse");
      if (phi && !is_list_coloring(sr.g0, sr.l0, phi0)) problems.push_back("pulled-back colouring is improper");
      for (Vertex x = 1; x < sr.g0.num_vertices(); ++x) {
        if (sr.rho[x] != sr.rho[x - 1]) continue;
        Coloring broken = phi0;
        broken.assign(x, phi0[x] == 0 ? 1 : 0);
        bool rejected = false;
        try {
          push_forward(sr, broken);
        } catch (const ArgumentError&) {
          rejected = true;
        }
        if (!rejected) problems.push_back("disagreeing fibre accepted");
        break;
      }

      ProofLedger led = build_ledger(*inst, run, d_param, c.c1, c.c2);
      if (!led.r_sizes_match || !led.z_size_bound || !led.z0_contains_preimage)
        problems.push_back("ledger set relations fail");
      if (led.z0_equals_preimage) o.counts["z0_equals_preimage"] += 1;
      ClaimsReport claims = check_claims(*inst, run, led);
      Json claim_json = Json::object();
      for (const ClaimResult& cr : claims.claims) {
        claim_json[cr.name] = to_string(cr.status);
        o.counts["claim_" + cr.name + "_" + to_string(cr.status)] += 1;
        if (cr.name == "S0Colorable" && inst->min_distance >= 3 && cr.status != ClaimStatus::kHolds)
          problems.push_back("tree colouring of S failed at distance >= 3");
      }
      o.counts["colorable"] += phi.has_value();
      o.counts["g0_vertices"] += sr.g0.num_vertices();
      rec["m"] = inst->sets.size();
      rec["distance"] = inst->min_distance;
      rec["g_vertices"] = g.num_vertices();
      rec["g0_vertices"] = sr.g0.num_vertices();
      rec["claims"] = claim_json;
      o.rows.push_back(std::to_string(i) + "," + hash + "," + ledger_csv_row(led));
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    if (problems.empty()) {
      rec["status"] = "ok";
      o.records.push_back(rec.dump());
    } else {
      rec["reason"] = problems;
      rec["instance"] = Json::parse(instance_text);
      o.fail(rec);
    }
  });
  return finish(c, combine(out), {{"D", std::to_string(d_param)}}, "index,hash," + ledger_csv_header());
}

// --- growth ------------------------------------------------------------------

SuiteResult run_growth(const CampaignConfig& c) {
  std::vector<Outcome> out(c.samples);
  std::vector<std::optional<RatioInput>> ratio_inputs(c.samples);
  parallel_for(c.samples, c.jobs, [&](std::size_t i) {
    Outcome& o = out[i];
    Rng rng(instance_seed(c.seed, i));
    auto five = draw_critical(CriticalKind::kFiveList, c, rng);
    auto path3 = draw_critical(CriticalKind::kPathCanvas3, c, rng);
    if (!five && !path3) {
      ++o.skipped;
      return;
    }
    ++o.checked;
    Json rec{{"index", i}};
    std::vector<std::string> problems;
    Json instances = Json::object();
    try {
      if (five) {
        Canvas cv = critical_canvas(*five);
        instances["five"] = detail::canvas_json(cv);
        rec["hash"] = content_hash(instances["five"].dump());
        if (!is_T_critical(cv.graph, cv.lists, cv.scaffold).is_critical) problems.push_back("growth instance is not critical");
        Json rings = Json::array();
        for (Vertex v = 0; v < cv.graph.num_vertices(); ++v) {
          if (cv.scaffold.has_vertex(v)) continue;
          GrowthProfile p = growth_profile(cv.graph, cv.lists, cv.scaffold, v, false);
          o.counts["centers"] += 1;
          int sum = 0;
          for (int r : p.rings) sum += r;
          if (p.rings.empty() || p.rings[0] != 1 || sum != p.balls.back()) problems.push_back("ring bookkeeping fails");
          if (!p.weak_bound) problems.push_back("ring of size < 2 at vertex " + std::to_string(v));
          if (std::isfinite(p.exponent)) {
            o.minima["exponent"] = o.minima.count("exponent") ? std::min(o.minima["exponent"], p.exponent) : p.exponent;
            o.maxima["exponent"] = o.maxima.count("exponent") ? std::max(o.maxima["exponent"], p.exponent) : p.exponent;
          }
          o.maxima["depth"] = std::max(o.maxima["depth"], static_cast<double>(p.depth));
          rings.push_back({{"v", v}, {"rings", p.rings}});
        }
        rec["profiles"] = rings;
      }
      if (path3) {
        Canvas cv = critical_canvas(*path3);
        instances["path3"] = detail::canvas_json(cv);
        o.counts["subneighbors"] += 1;
        if (!check_subneighbors(cv)) problems.push_back("truncation containment fails");
        ratio_inputs[i] = RatioInput{content_hash(instances["path3"].dump()), cv};
      }
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    if (problems.empty()) {
      rec["status"] = "ok";
      o.records.push_back(rec.dump());
    } else {
      rec["reason"] = problems;
      rec["instances"] = instances;
      o.fail(rec);
    }
  });
  std::vector<RatioInput> corpus;
  for (auto& r : ratio_inputs)
    if (r) corpus.push_back(std::move(*r));
  RatioTable table = ratio_diagnostics(corpus);
  Aggregate a = combine(out);
  SuiteResult res = finish(c, std::move(a),
                           {{"max_star_ratio", fixed6(table.max_star_ratio)},
                            {"max_size_ratio", fixed6(table.max_size_ratio)}},
                           "");
  res.csv = ratio_csv(table);
  return res;
}

// --- main-theorem-search -----------------------------------------------------

SuiteResult run_main_search(const CampaignConfig& c) {
  const int min_distance = c.distance.value_or(3);
  const long long theorem_d = solve_D_inequality(c.c1, c.c2).d;
  std::vector<Outcome> out(c.samples);
  parallel_for(c.samples, c.jobs, [&](std::size_t i) {
    Outcome& o = out[i];
    Rng rng(instance_seed(c.seed, i));
    const int m = 2 + static_cast<int>(i % 2);
    auto inst = sample_face_instance(m, min_distance, c.palette, rng);
    if (!inst) {
      ++o.skipped;
      return;
    }
    ++o.checked;
    try {
      if (solve_main(*inst)) {
        o.counts["colorable"] += 1;
        return;
      }
      o.counts["uncolorable"] += 1;
      const std::string text = main_instance_to_json(*inst);
      Json rec{{"index", i}, {"hash", content_hash(text)}, {"distance", inst->min_distance},
               {"instance", Json::parse(text)}};
      if (inst->min_distance >= theorem_d) {
        rec["reason"] = "uncolourable instance beyond the theorem's distance";
        o.fail(rec);
      } else {
        rec["status"] = "uncolorable-below-threshold";
        o.records.push_back(rec.dump());
      }
    } catch (const std::exception& e) {
      o.fail(Json{{"index", i}, {"reason", e.what()}, {"instance", Json::parse(main_instance_to_json(*inst))}});
    }
  });
  return finish(c, combine(out), {{"min_distance", std::to_string(min_distance)}}, "");
}

// --- d-solve -----------------------------------------------------------------

SuiteResult run_d_solve(const CampaignConfig& c) {
  Outcome o;
  const DSolution base = solve_D_inequality(c.c1, c.c2);
  std::vector<std::vector<long long>> grid(5, std::vector<long long>(5));
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      const double c1 = c.c1 + 0.25 * a, c2 = c.c2 + 0.25 * b;
      DSolution s = solve_D_inequality(c1, c2);
      grid[a][b] = s.d;
      ++o.checked;
      const bool ok = s.d >= s.floor_even && s.d % 2 == 0 && d_inequality_holds(s.d, c1, c2) && s.f_positive &&
                      s.d_prime_bound && (s.d == s.floor_even || !d_inequality_holds(s.d - 2, c1, c2));
      std::ostringstream row;
      row << fixed6(c1) << ',' << fixed6(c2) << ',' << s.d << ',' << s.floor_even << ',' << s.inequality_threshold
          << ',' << (s.f_positive ? 1 : 0) << ',' << std::setprecision(10) << s.f_value;
      o.rows.push_back(row.str());
      if (!ok) o.fail(Json{{"c1", c1}, {"c2", c2}, {"d", s.d}, {"reason", "solution fails its checks"}});
    }
  }
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if ((a > 0 && grid[a][b] < grid[a - 1][b]) || (b > 0 && grid[a][b] < grid[a][b - 1]))
        o.fail(Json{{"grid", {a, b}}, {"reason", "D decreases along the grid"}});
  std::vector<Outcome> all;
  all.push_back(std::move(o));
  return finish(c, combine(all),
                {{"D", std::to_string(base.d)},
                 {"floor_even", std::to_string(base.floor_even)},
                 {"inequality_threshold", std::to_string(base.inequality_threshold)},
                 {"f_positive", base.f_positive ? "true" : "false"},
                 {"f_at_D_prime", fixed6(base.f_value)}},
                "c1,c2,D,floor_even,inequality_threshold,f_positive,f_value");
}

struct SuiteSpec {
  const char* name;
  int n_max;
  std::uint64_t samples;
  int n_cap;  // 0: enumeration cap
  SuiteResult (*run)(const CampaignConfig&);
};

const std::vector<SuiteSpec>& suites() {
  static const std::vector<SuiteSpec> table{
      {"thomassen-verify", 6, 20, 0, run_thomassen},
      {"restricted-face-verify", 6, 20, 0, run_restricted_face},
      {"steiner-lemma", 12, 10000, 20, run_steiner},
      {"criticality-lemmas", 9, 1000, 12, run_criticality},
      {"surgery-roundtrip", 0, 100, 0, run_surgery_suite},
      {"growth", 9, 200, 12, run_growth},
      {"main-theorem-search", 0, 200, 0, run_main_search},
      {"d-solve", 0, 1, 0, run_d_solve},
  };
  return table;
}

const SuiteSpec& find_suite(const std::string& name) {
  for (const SuiteSpec& s : suites())
    if (name == s.name) return s;
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const SuiteSpec& s : suites()) out.emplace_back(s.name);
  return out;
}

CampaignConfig resolved(const CampaignConfig& config) {
  const SuiteSpec& spec = find_suite(config.suite);
  CampaignConfig c = config;
  if (c.n_max == 0) c.n_max = spec.n_max;
  if (c.samples == 0) c.samples = spec.samples;
  if (c.n_max < 0) throw ConfigError("--n-max must be positive");
  if (spec.n_max > 0) {
    const int cap = spec.n_cap == 0 ? enumeration_cap() : hard_cap(spec.n_cap);
    if (c.n_max > cap)
      throw ConfigError("--n-max " + std::to_string(c.n_max) + " exceeds the cap " + std::to_string(cap) +
                        " for " + c.suite + " (CANVAS_FORGE_CAP overrides)");
    const int floor = spec.n_cap == 0 ? 1 : (c.suite == "steiner-lemma" ? 2 : 4);
    if (c.n_max < floor) throw ConfigError("--n-max must be at least " + std::to_string(floor) + " for " + c.suite);
  }
  if (c.palette < 5 || c.palette > kMaxColors) throw ConfigError("--palette must be between 5 and 64");
  if (c.jobs < 1) throw ConfigError("--jobs must be positive");
  if (!(c.c1 >= 1.0) || !(c.c2 >= 1.0) || !std::isfinite(c.c1) || !std::isfinite(c.c2))
    throw ConfigError("--c1 and --c2 must be finite and >= 1");
  if (c.distance && *c.distance < 1) throw ConfigError("--distance must be positive");
  return c;
}

SuiteResult run_suite(const CampaignConfig& config) {
  CampaignConfig c = resolved(config);
  SuiteResult r = find_suite(c.suite).run(c);
  if (!c.out.empty()) write_artifacts(r, c.out);
  return r;
}

void write_artifacts(const SuiteResult& result, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& ext, const std::string& text) {
    const auto path = std::filesystem::path(dir) / (result.suite + ext);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << text;
    if (!f) throw std::runtime_error("failed writing " + path.string());
  };
  write(".jsonl", result.jsonl);
  if (!result.csv.empty()) write(".csv", result.csv);
}

}  // namespace canvas_forge
