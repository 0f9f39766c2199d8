#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "canvas_forge/campaign.hpp"
#include "canvas_forge/corpus.hpp"
#include "canvas_forge/export.hpp"
#include "canvas_forge/serialize.hpp"
#include "canvas_forge/surgery.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace canvas_forge;

namespace {

CampaignConfig small(const std::string& suite) {
  CampaignConfig c;
  c.suite = suite;
  c.seed = 7;
  if (suite == "thomassen-verify" || suite == "restricted-face-verify") {
    c.n_max = 4;
    c.samples = 3;
  } else if (suite == "steiner-lemma") {
    c.samples = 200;
  } else if (suite != "d-solve") {
    c.samples = 12;
  }
  return c;
}

}  // namespace

TEST_CASE("every suite runs clean at small scale and is reproducible") {
  for (const std::string& name : suite_names()) {
    CAPTURE(name);
    CampaignConfig c = small(name);
    SuiteResult a = run_suite(c);
    CHECK(a.failures == 0);
    CHECK(a.exit_code() == 0);
    CHECK(a.instances > 0);
    c.jobs = 3;
    SuiteResult b = run_suite(c);
    CHECK(a.jsonl == b.jsonl);
    CHECK(a.csv == b.csv);
    c.seed = 8;
    if (name != "d-solve") CHECK(run_suite(c).jsonl != a.jsonl);
  }
}

TEST_CASE("configuration errors") {
  CampaignConfig c;
  c.suite = "no-such-suite";
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  c.suite = "thomassen-verify";
  c.n_max = 40;
  CHECK_THROWS_AS(resolved(c), ConfigError);
  c.n_max = 4;
  c.palette = 4;
  CHECK_THROWS_AS(resolved(c), ConfigError);
  c.palette = 6;
  c.jobs = 0;
  CHECK_THROWS_AS(resolved(c), ConfigError);
  c.jobs = 1;
  c.suite = "d-solve";
  c.c1 = 0.9;
  CHECK_THROWS_AS(resolved(c), ConfigError);
}

TEST_CASE("suite defaults") {
  CampaignConfig c;
  c.suite = "steiner-lemma";
  CampaignConfig r = resolved(c);
  CHECK(r.samples == 10000);
  CHECK(r.n_max == 12);
}

TEST_CASE("d-solve report") {
  CampaignConfig c;
  c.suite = "d-solve";
  SuiteResult r = run_suite(c);
  auto find = [&](const std::string& key) {
    for (const auto& [k, v] : r.summary)
      if (k == key) return v;
    return std::string();
  };
  CHECK(find("D") == "720");
  CHECK(find("floor_even") == "720");
  CHECK(r.csv.rfind("c1,c2,D,floor_even,inequality_threshold,f_positive,f_value\n", 0) == 0);
  CHECK(std::count(r.csv.begin(), r.csv.end(), '\n') == 26);
}

TEST_CASE("artifacts on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "canvas_forge_campaign_test";
  std::filesystem::remove_all(dir);
  CampaignConfig c = small("surgery-roundtrip");
  c.out = dir.string();
  SuiteResult r = run_suite(c);
  std::ifstream f(dir / "surgery-roundtrip.jsonl");
  std::stringstream text;
  text << f.rdbuf();
  CHECK(text.str() == r.jsonl);
  CHECK(std::filesystem::exists(dir / "surgery-roundtrip.csv"));
  CHECK(r.jsonl.rfind("{\"header\":", 0) == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("parallel_for") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, 2, [](std::size_t i) {
                    if (i == 5) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}

TEST_CASE("export") {
  const std::string k3 = graph_to_json(shapes::cycle(3));
  SUBCASE("K3 to DOT") {
    std::string dot = export_document(k3, ExportFormat::kDot);
    CHECK(dot.rfind("graph G {", 0) == 0);
    int nodes = 0;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);)
      if (line.find("--") == std::string::npos && line.find(';') != std::string::npos) ++nodes;
    CHECK(nodes == 3);
  }
  SUBCASE("K3 to CSV and back to JSON") {
    CHECK(export_document(k3, ExportFormat::kCsv) == "edge,u,v\n0,0,1\n1,0,2\n2,1,2\n");
    CHECK(export_document(k3, ExportFormat::kJson) == k3 + "\n");
  }
  SUBCASE("many-sets instance to surgery JSON and ledger CSV") {
    Rng rng(3);
    auto inst = sample_face_instance(2, 3, 6, rng);
    REQUIRE(inst);
    const std::string text = main_instance_to_json(*inst);
    const std::string json = export_document(text, ExportFormat::kJson);
    CHECK(json.find("\"rho\":[") != std::string::npos);
    CHECK(json == export_document(text, ExportFormat::kJson));
    const std::string csv = export_document(text, ExportFormat::kCsv);
    CHECK(csv.rfind(ledger_csv_header() + "\n", 0) == 0);
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(parse_export_format("xml"), ArgumentError);
    CHECK_THROWS_AS(export_document("not json", ExportFormat::kJson), ArgumentError);
  }
}
