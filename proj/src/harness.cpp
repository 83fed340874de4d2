#include "gqweyl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gqweyl/polarization.hpp"

namespace gqw::harness {

namespace {

bool suite_selected(const SuiteConfig& cfg, const std::string& suite) {
  for (const auto& s : cfg.suites)
    if (s == "all" || s == suite) return true;
  return false;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "clifford", "sigma",        "covering", "presymplectic",
      "prequantum", "polarization", "weyl",     "poincare"};
  return names;
}

const std::vector<std::string>& required_anchors() {
  // One tag per structural identity of the model, in presentation order:
  // representation and spinor constraints, momenta, the invariant one-form
  // and its kernel, the motion space, the bundle, polarization, transform,
  // field equations and the group action.
  static const std::vector<std::string> tags = {
      "dirac-representation",      // fixed gamma matrices
      "fundamental-relations",     // bar(zeta) zeta = 1, bar(zeta) gamma5 zeta = 0
      "half-spinor-split",         // zp^dag zs = 1 equivalence
      "momentum-vector",           // null future P (and Q)
      "invariant-one-form",        // varpi
      "kernel-distribution",       // ker sigma
      "space-of-motions",          // X^6 = T*C+
      "twisted-symplectic-form",   // omega = dp^dx - s surf
      "projection-motions",        // (p, x) projection
      "energy-formula",            // E = |p| = |zp|^2/sqrt2
      "z-variables",               // Z = phase * zeta
      "bundle-section",            // Z'' = Z'/|Z'|^2, x = r
      "connection-form",           // alpha
      "momentum-from-z",           // p = Z'^dag sigma Z'/sqrt2
      "equivariant-functions",     // U(1) weight of Psi
      "polarization-defining",     // isotropic vertical F, omega(F,F) = 0
      "polarizer",                 // phi = dp^3/|p|
      "covariant-derivative",      // phi ^ D Psi = 0
      "explicit-wavefunction",     // Psi = bar(Z) psi(P)
      "momentum-space-conditions", // gamma(P) psi = 0, gamma5 psi = i chi psi
      "lightcone-transform",       // partial Fourier transform
      "weyl-equation",             // gamma^mu d_mu psi~ = 0
      "group-action",              // (anti-)representation on solutions
      "weyl-two-component",        // sigma^j d_j = chi d_t form
  };
  return tags;
}

Report run_suites(const SuiteConfig& cfg) {
  if (!cfg.params.valid()) throw std::invalid_argument("run_suites: invalid params");
  for (const auto& s : cfg.suites) {
    if (s == "all") continue;
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw std::invalid_argument("run_suites: unknown suite '" + s + "'");
  }
  for (const auto& [name, tol] : cfg.tol_overrides) {
    (void)name;
    if (tol < 0.0) throw std::invalid_argument("run_suites: tolerances must be >= 0");
  }

  const auto& defs = registry();
  std::vector<int> selected;
  for (int i = 0; i < static_cast<int>(defs.size()); ++i)
    if (suite_selected(cfg, defs[i].suite)) selected.push_back(i);

  Report rep;
  rep.results.resize(selected.size());
  const auto t0 = std::chrono::steady_clock::now();

  std::atomic<std::size_t> cursor{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t k = cursor.fetch_add(1);
      if (k >= selected.size()) return;
      const CheckDef& def = defs[static_cast<std::size_t>(selected[k])];
      CheckContext ctx{&cfg, derived_stream(cfg.seed, def.name),
                       cfg.samples > 0 ? cfg.samples : def.default_samples, 0};
      ctx.samples_run = ctx.samples;
      const auto c0 = std::chrono::steady_clock::now();
      double err = 0.0;
      try {
        err = def.run(ctx);
      } catch (const std::exception& e) {
        err = std::numeric_limits<double>::infinity();
        (void)e;
      }
      const auto c1 = std::chrono::steady_clock::now();
      CheckResult& r = rep.results[k];
      r.name = def.name;
      r.anchor = def.anchor;
      r.suite = def.suite;
      r.samples = ctx.samples_run;
      r.max_abs_error = err;
      const auto it = cfg.tol_overrides.find(def.name);
      r.tolerance = it == cfg.tol_overrides.end() ? def.default_tol : it->second;
      r.pass = err <= r.tolerance;
      r.elapsed_ms =
          cfg.timestamps
              ? std::chrono::duration<double, std::milli>(c1 - c0).count()
              : 0.0;
    }
  };

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& r : rep.results) (r.pass ? rep.passed : rep.failed)++;
  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = cfg.timestamps
                    ? std::chrono::duration<double, std::milli>(t1 - t0).count()
                    : 0.0;
  return rep;
}

nlohmann::ordered_json report_json(const Report& rep, const SuiteConfig& cfg) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  nlohmann::ordered_json jc;
  jc["suites"] = cfg.suites;
  jc["seed"] = cfg.seed;
  jc["samples"] = cfg.samples;
  jc["chi"] = cfg.params.chi;
  jc["hbar"] = cfg.params.hbar;
  jc["jobs"] = cfg.jobs;
  nlohmann::ordered_json jq;
  jq["e_min"] = cfg.quad.e_min;
  jq["e_max"] = cfg.quad.e_max;
  jq["n_radial"] = cfg.quad.n_radial;
  jq["n_angular"] = cfg.quad.n_angular;
  jc["quadrature"] = jq;
  nlohmann::ordered_json jt = nlohmann::ordered_json::object();
  for (const auto& [k, v] : cfg.tol_overrides) jt[k] = v;
  jc["tolerances"] = jt;
  j["config"] = jc;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rep.results) {
    nlohmann::ordered_json jr;
    jr["name"] = r.name;
    jr["anchor"] = r.anchor;
    jr["suite"] = r.suite;
    jr["samples"] = r.samples;
    jr["max_abs_error"] = fmt17(r.max_abs_error);
    jr["tolerance"] = fmt17(r.tolerance);
    jr["pass"] = r.pass;
    jr["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(jr);
  }
  j["results"] = arr;
  nlohmann::ordered_json js;
  js["passed"] = rep.passed;
  js["failed"] = rep.failed;
  js["wall_ms"] = rep.wall_ms;
  j["summary"] = js;
  return j;
}

std::pair<std::string, std::map<std::string, double>> parse_profile(const std::string& s) {
  const auto colon = s.find(':');
  std::map<std::string, double> kv;
  const std::string name = s.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream ss(s.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("profile parameter without '=': " + item);
      kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
  }
  return {name, kv};
}

std::pair<std::array<int, 4>, double> parse_grid(const std::string& s) {
  std::array<int, 4> n{};
  double step = 0.0;
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("grid must look like AxBxCxD:step");
  std::stringstream ss(s.substr(0, colon));
  std::string item;
  int k = 0;
  while (std::getline(ss, item, 'x')) {
    if (k >= 4) throw std::invalid_argument("grid needs exactly four extents");
    n[static_cast<std::size_t>(k++)] = std::stoi(item);
  }
  if (k != 4) throw std::invalid_argument("grid needs exactly four extents");
  step = std::stod(s.substr(colon + 1));
  for (int v : n)
    if (v < 1) throw std::invalid_argument("grid extents must be >= 1");
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
  return {n, step};
}

void load_config_file(const std::string& path, SuiteConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto notspace = line.find_first_not_of(" \t\r\n");
    if (notspace == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    auto trim = [](std::string v) {
      const auto b = v.find_first_not_of(" \t\r\n");
      const auto e = v.find_last_not_of(" \t\r\n");
      return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "suites") {
        cfg.suites.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.suites.push_back(trim(item));
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "samples") {
        cfg.samples = std::stoi(value);
      } else if (key == "chi") {
        cfg.params.chi = std::stoi(value);
      } else if (key == "hbar") {
        cfg.params.hbar = std::stod(value);
      } else if (key == "jobs") {
        cfg.jobs = std::stoi(value);
      } else if (key == "e_min") {
        cfg.quad.e_min = std::stod(value);
      } else if (key == "e_max") {
        cfg.quad.e_max = std::stod(value);
      } else if (key == "n_radial") {
        cfg.quad.n_radial = std::stoi(value);
      } else if (key == "n_angular") {
        cfg.quad.n_angular = std::stoi(value);
      } else if (key.rfind("tol.", 0) == 0) {
        cfg.tol_overrides[key.substr(4)] = std::stod(value);
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": bad value for '" + key + "'");
    }
  }
}

void emit_field(const FieldConfig& cfg) {
  const auto [pname, pkv] = parse_profile(cfg.profile);
  const auto amp = polarization::make_profile(pname, pkv);
  const ModelParams params{cfg.chi, cfg.hbar};
  if (!params.valid()) throw std::invalid_argument("emit_field: invalid chi/hbar");

  const auto psi = polarization::make_momentum_spinor(amp, cfg.chi);
  const auto field = lightcone::make_field(psi, cfg.quad, params);

  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw std::runtime_error("emit_field: cannot write " + cfg.out);
  out << "r1,r2,r3,t,re1,im1,re2,im2,re3,im3,re4,im4\n";
  const auto& n = cfg.grid_n;
  const double step = cfg.grid_step;
  for (int i1 = 0; i1 < n[0]; ++i1)
    for (int i2 = 0; i2 < n[1]; ++i2)
      for (int i3 = 0; i3 < n[2]; ++i3)
        for (int i4 = 0; i4 < n[3]; ++i4) {
          MinkowskiVector R((i1 - 0.5 * (n[0] - 1)) * step,
                            (i2 - 0.5 * (n[1] - 1)) * step,
                            (i3 - 0.5 * (n[2] - 1)) * step,
                            (i4 - 0.5 * (n[3] - 1)) * step);
          const Vector4c v = field.eval(R);
          out << fmt17(R[0]) << ',' << fmt17(R[1]) << ',' << fmt17(R[2]) << ','
              << fmt17(R[3]);
          for (int c = 0; c < 4; ++c)
            out << ',' << fmt17(v(c).real()) << ',' << fmt17(v(c).imag());
          out << '\n';
        }
  out.close();

  nlohmann::ordered_json meta;
  meta["version"] = 1;
  meta["profile"] = cfg.profile;
  meta["chi"] = cfg.chi;
  meta["hbar"] = cfg.hbar;
  nlohmann::ordered_json jq;
  jq["e_min"] = cfg.quad.e_min;
  jq["e_max"] = cfg.quad.e_max;
  jq["n_radial"] = cfg.quad.n_radial;
  jq["n_angular"] = cfg.quad.n_angular;
  jq["scheme"] = cfg.quad.scheme == lightcone::Scheme::product_gauss
                     ? "product-gauss"
                     : "monte-carlo";
  jq["seed"] = cfg.quad.seed;
  jq["node_count"] = field.table ? field.table->size() : 0;
  meta["quadrature"] = jq;
  nlohmann::ordered_json jg;
  jg["extents"] = cfg.grid_n;
  jg["step"] = cfg.grid_step;
  meta["grid"] = jg;
  meta["columns"] = "r1,r2,r3,t,re1,im1,re2,im2,re3,im3,re4,im4";
  std::ofstream mout(cfg.out + ".meta.json", std::ios::binary);
  if (!mout) throw std::runtime_error("emit_field: cannot write metadata");
  mout << meta.dump(2) << '\n';
}

}  // namespace gqw::harness
