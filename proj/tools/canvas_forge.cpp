// Campaign runner and serialization front end.
//
//   canvas_forge thomassen-verify --n-max 8 --samples 200 --seed 7 --out reports
//   canvas_forge --suite d-solve --c1 1 --c2 1
//   canvas_forge export --input instance.json --format dot

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "canvas_forge/campaign.hpp"
#include "canvas_forge/export.hpp"

namespace {

constexpr int kExitFailure = 2;
constexpr int kExitConfig = 3;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void print_summary(const canvas_forge::SuiteResult& r) {
  std::cout << "suite: " << r.suite << "\n";
  for (const auto& [k, v] : r.summary) std::cout << k << ": " << v << "\n";
  std::cout << (r.failures ? "FAILED" : "OK") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canvas_forge: list-colouring canvases, seam surgery and verification campaigns"};
  app.set_version_flag("--version", "canvas_forge 0.1.0");

  canvas_forge::CampaignConfig config;
  config.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string positional_suite;
  int distance = 0;
  bool list = false;

  app.add_option("suite_name", positional_suite, "Suite to run (same as --suite)");
  app.add_option("--suite", config.suite, "Suite to run");
  app.add_option("--n-max", config.n_max, "Largest vertex count (suite default when omitted)");
  app.add_option("--palette", config.palette, "Number of colours to draw lists from")->capture_default_str();
  app.add_option("--samples", config.samples, "Samples per graph or instances (suite default when omitted)");
  app.add_option("--seed", config.seed, "Campaign seed")->capture_default_str();
  app.add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();
  app.add_option("--out", config.out, "Directory for <suite>.jsonl and <suite>.csv");
  app.add_option("--c1", config.c1, "Constant c1 of the D inequality")->capture_default_str();
  app.add_option("--c2", config.c2, "Constant c2 of the D inequality")->capture_default_str();
  auto* distance_opt = app.add_option("--distance", distance, "Distance parameter D (or minimum face distance)");
  app.add_flag("--list", list, "List suite names and exit");
  app.footer("Exit status: 0 success, 2 invariant failure, 3 configuration error, 1 export I/O error.\n"
             "CANVAS_FORGE_CAP=<n> raises the per-suite vertex caps. This is unsafe: run times grow\n"
             "exponentially past the defaults.");

  auto* exp = app.add_subcommand("export", "Render a graph, canvas or many-sets instance");
  std::string input = "-", output = "-", format = "json";
  exp->add_option("--input,-i", input, "JSON document, '-' for stdin")->capture_default_str();
  exp->add_option("--output,-o", output, "Target file, '-' for stdout")->capture_default_str();
  exp->add_option("--format,-f", format, "json, dot or csv")->capture_default_str();
  exp->add_option("--distance", distance, "Distance parameter for ledger rows");
  exp->add_option("--c1", config.c1, "Constant c1 for ledger rows");
  exp->add_option("--c2", config.c2, "Constant c2 for ledger rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (list) {
    for (const auto& name : canvas_forge::suite_names()) std::cout << name << "\n";
    return 0;
  }

  if (*exp) {
    try {
      const auto fmt = canvas_forge::parse_export_format(format);
      const std::string text = canvas_forge::export_document(read_all(input), fmt, distance, config.c1, config.c2);
      if (output == "-") {
        std::cout << text;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f || !(f << text)) throw std::runtime_error("cannot write " + output);
      }
      return 0;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitConfig;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  if (!positional_suite.empty()) {
    if (!config.suite.empty() && config.suite != positional_suite) {
      std::cerr << "error: conflicting suite names '" << positional_suite << "' and '" << config.suite << "'\n";
      return kExitConfig;
    }
    config.suite = positional_suite;
  }
  if (config.suite.empty()) {
    std::cerr << app.help() << "\nerror: no suite given\n";
    return kExitConfig;
  }
  if (*distance_opt) config.distance = distance;

  try {
    const canvas_forge::SuiteResult r = canvas_forge::run_suite(config);
    print_summary(r);
    return r.exit_code() == 0 ? 0 : kExitFailure;
  } catch (const canvas_forge::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
