#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace canvas_forge {

/// Invalid suite name, flag value or cap violation (exit code 3).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CampaignConfig {
  std::string suite;
  int n_max = 0;              // 0 selects the suite default
  int palette = 6;
  std::uint64_t samples = 0;  // 0 selects the suite default
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out;            // report directory; empty writes nothing
  double c1 = 1.0;
  double c2 = 1.0;
  std::optional<int> distance;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
  std::vector<std::pair<std::string, std::string>> summary;  // ordered
  std::string jsonl;  // header line, one line per recorded instance, summary line
  std::string csv;    // empty for suites without a table

  int exit_code() const { return failures > 0 ? 2 : 0; }
};

std::vector<std::string> suite_names();

/// Fills suite defaults and checks caps; throws ConfigError.
CampaignConfig resolved(const CampaignConfig& config);

/// Runs one suite. Throws ConfigError on bad configuration; every invariant
/// failure is counted and recorded with its full instance.
SuiteResult run_suite(const CampaignConfig& config);

/// Writes <dir>/<suite>.jsonl and, when present, <dir>/<suite>.csv.
void write_artifacts(const SuiteResult& result, const std::string& dir);

/// Calls fn(i) for i in [0, count) on `jobs` threads that claim indices from a
/// shared counter. The first exception is rethrown after all threads stop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace canvas_forge
