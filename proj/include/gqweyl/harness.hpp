#ifndef GQWEYL_HARNESS_HPP
#define GQWEYL_HARNESS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gqweyl/lightcone.hpp"
#include "gqweyl/rng.hpp"
#include "gqweyl/types.hpp"

namespace gqw::harness {

struct SuiteConfig {
  std::vector<std::string> suites = {"all"};
  std::uint64_t seed = 7;
  int samples = 0;  // 0 = per-check defaults
  std::map<std::string, double> tol_overrides;
  ModelParams params;
  lightcone::QuadratureSpec quad;
  int jobs = 1;
  bool timestamps = true;
};

struct CheckResult {
  std::string name;
  std::string anchor;  // identity tag the check verifies
  std::string suite;
  long samples = 0;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct Report {
  std::vector<CheckResult> results;
  int passed = 0;
  int failed = 0;
  double wall_ms = 0.0;
};

struct CheckContext {
  const SuiteConfig* cfg;
  RandomStream rng;
  int samples;
  long samples_run = 0;  // body may report the actual count
};

struct CheckDef {
  std::string name;
  std::string anchor;
  std::string suite;
  int default_samples;
  double default_tol;
  std::function<double(CheckContext&)> run;  // returns max abs error
};

// All registered checks, in execution/report order.
const std::vector<CheckDef>& registry();

// Stable list of suite names accepted by run_suites.
const std::vector<std::string>& suite_names();

// Identity tags that the registry must cover (one per in-scope structural
// identity of the model); checked by the static completeness test.
const std::vector<std::string>& required_anchors();

// Executes the selected suites. Deterministic for a fixed config: every check
// draws from a stream derived from (seed, check name), so serial and parallel
// runs produce identical numbers.
Report run_suites(const SuiteConfig& cfg);

nlohmann::ordered_json report_json(const Report& rep, const SuiteConfig& cfg);

// --- field export -----------------------------------------------------------

struct FieldConfig {
  std::string profile = "bump:a=1,b=2";
  int chi = -1;
  double hbar = 1.0;
  std::array<int, 4> grid_n = {5, 5, 5, 5};
  double grid_step = 0.5;
  lightcone::QuadratureSpec quad;
  std::string out = "field.csv";
  bool timestamps = true;
};

// Writes the CSV field slice plus a JSON metadata file (<out> + ".meta.json").
// Byte-identical for a fixed config.
void emit_field(const FieldConfig& cfg);

// "name:k=v,k=v" -> (name, params)
std::pair<std::string, std::map<std::string, double>> parse_profile(const std::string& s);

// "AxBxCxD:step" -> (counts, step)
std::pair<std::array<int, 4>, double> parse_grid(const std::string& s);

// Flat key=value file ('#' comments); keys: suites, seed, samples, chi, hbar,
// jobs, e_min, e_max, n_radial, n_angular, tol.<check-name>.
void load_config_file(const std::string& path, SuiteConfig& cfg);

}  // namespace gqw::harness

#endif
