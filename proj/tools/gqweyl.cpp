// gqweyl: property-suite runner and field generator for the massless
// spin-1/2 toolkit. `gqweyl verify` executes the check suites; `gqweyl field`
// evaluates a polarized solution on a spacetime lattice and writes CSV.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gqweyl/harness.hpp"

namespace {

int run_verify(const gqw::harness::SuiteConfig& cfg, const std::string& report_path) {
  const gqw::harness::Report rep = gqw::harness::run_suites(cfg);
  for (const auto& r : rep.results) {
    std::printf("[%s] %-36s max_err=%11.4e tol=%9.2e samples=%ld\n",
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.max_abs_error,
                r.tolerance, r.samples);
  }
  std::printf("summary: %d passed, %d failed\n", rep.passed, rep.failed);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "cannot write report to %s\n", report_path.c_str());
      return 2;
    }
    out << gqw::harness::report_json(rep, cfg).dump(2) << '\n';
  }
  return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric quantization of the massless spin-1/2 particle"};
  app.require_subcommand(1);

  gqw::harness::SuiteConfig cfg;
  std::string report_path;
  std::string config_path;
  std::vector<std::string> suites;
  std::vector<std::string> tol_args;
  bool no_timestamps = false;

  CLI::App* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--config", config_path, "flat key=value config file");
  verify->add_option("--suite", suites, "suite name (repeatable; default all)");
  verify->add_option("--seed", cfg.seed, "base seed for all checks");
  verify->add_option("--samples", cfg.samples,
                     "override per-check sample counts (0 = defaults)");
  verify->add_option("--tol", tol_args, "tolerance override name=value (repeatable)");
  verify->add_option("--hbar", cfg.params.hbar, "action unit");
  verify->add_option("--chi", cfg.params.chi, "helicity sign (+1 or -1)");
  verify->add_option("--jobs", cfg.jobs, "parallel check workers");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_flag("--no-timestamps", no_timestamps,
                   "zero out timing fields for byte-identical reports");
  verify->add_option("--e-min", cfg.quad.e_min, "quadrature window lower edge");
  verify->add_option("--e-max", cfg.quad.e_max, "quadrature window upper edge");
  verify->add_option("--n-radial", cfg.quad.n_radial, "radial node count");
  verify->add_option("--n-angular", cfg.quad.n_angular, "polar node count");

  gqw::harness::FieldConfig fcfg;
  std::string grid_arg = "5x5x5x5:0.5";
  CLI::App* field = app.add_subcommand("field", "evaluate a field on a lattice");
  field->add_option("--profile", fcfg.profile, "amplitude, e.g. bump:a=1,b=2");
  field->add_option("--chi", fcfg.chi, "helicity sign (+1 or -1)");
  field->add_option("--hbar", fcfg.hbar, "action unit");
  field->add_option("--grid", grid_arg, "lattice AxBxCxD:step");
  field->add_option("--out", fcfg.out, "output CSV path")->required();
  field->add_option("--e-min", fcfg.quad.e_min, "quadrature window lower edge");
  field->add_option("--e-max", fcfg.quad.e_max, "quadrature window upper edge");
  field->add_option("--n-radial", fcfg.quad.n_radial, "radial node count");
  field->add_option("--n-angular", fcfg.quad.n_angular, "polar node count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      // precedence: CLI flags > config file > defaults
      if (!config_path.empty()) {
        gqw::harness::SuiteConfig file_cfg;
        gqw::harness::load_config_file(config_path, file_cfg);
        const gqw::harness::SuiteConfig defaults;
        if (suites.empty() && !file_cfg.suites.empty()) cfg.suites = file_cfg.suites;
        if (cfg.seed == defaults.seed) cfg.seed = file_cfg.seed;
        if (cfg.samples == defaults.samples) cfg.samples = file_cfg.samples;
        if (cfg.params.chi == defaults.params.chi) cfg.params.chi = file_cfg.params.chi;
        if (cfg.params.hbar == defaults.params.hbar)
          cfg.params.hbar = file_cfg.params.hbar;
        if (cfg.jobs == defaults.jobs) cfg.jobs = file_cfg.jobs;
        if (cfg.quad.e_min == defaults.quad.e_min) cfg.quad.e_min = file_cfg.quad.e_min;
        if (cfg.quad.e_max == defaults.quad.e_max) cfg.quad.e_max = file_cfg.quad.e_max;
        if (cfg.quad.n_radial == defaults.quad.n_radial)
          cfg.quad.n_radial = file_cfg.quad.n_radial;
        if (cfg.quad.n_angular == defaults.quad.n_angular)
          cfg.quad.n_angular = file_cfg.quad.n_angular;
        for (const auto& [k, v] : file_cfg.tol_overrides)
          cfg.tol_overrides.emplace(k, v);
      }
      if (!suites.empty()) cfg.suites = suites;
      for (const auto& t : tol_args) {
        const auto eq = t.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("--tol expects name=value, got " + t);
        cfg.tol_overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
      }
      cfg.timestamps = !no_timestamps;
      return run_verify(cfg, report_path);
    }
    if (field->parsed()) {
      const auto [extents, step] = gqw::harness::parse_grid(grid_arg);
      fcfg.grid_n = extents;
      fcfg.grid_step = step;
      gqw::harness::emit_field(fcfg);
      std::printf("wrote %s and %s.meta.json\n", fcfg.out.c_str(), fcfg.out.c_str());
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
