// Copyright 2026 The fermispec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand that writes files also writes
// <prefix>.manifest.json with the resolved configuration and SHA-256 digests
// of the outputs. FERMISPEC_THREADS overrides the OpenMP thread count.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <omp.h>
#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "fermispec/baseline.hpp"
#include "fermispec/circuit_io.hpp"
#include "fermispec/config.hpp"
#include "fermispec/cz_graph.hpp"
#include "fermispec/fft_compiler.hpp"
#include "fermispec/interleave.hpp"
#include "fermispec/protocol.hpp"
#include "fermispec/spectral.hpp"
#include "fermispec/tableau.hpp"
#include "fermispec/trotter_compare.hpp"
#include "fermispec/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace fermispec;

namespace {

constexpr const char* kVersion = FERMISPEC_VERSION;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string data = ss.str();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_json(const fs::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

json protocol_json(const ProtocolConfig& c) {
  json j;
  j["N"] = c.N;
  j["epsilon"] = c.epsilon;
  j["omega"] = c.omega;
  j["t"] = c.t;
  j["nu"] = c.nu;
  j["V"] = c.V;
  j["trotter_steps"] = c.trotter_steps;
  j["environment"] = fill_name(c.fill);
  j["initial_state"] = initial_state_name(c.initial);
  j["rho"] = c.rho;
  j["particles"] = c.particles;
  j["interleave"] = strategy_name(c.interleave);
  j["shots"] = c.shots;
  j["seed"] = c.seed;
  j["quadrature_points"] = c.quadrature_points;
  return j;
}

void write_manifest(const std::string& prefix, const std::string& sub,
                    const json& config, std::uint64_t seed,
                    const std::vector<fs::path>& outputs) {
  json m;
  m["subcommand"] = sub;
  m["config"] = config;
  m["seed"] = seed;
  m["version"] = kVersion;
  json digests = json::object();
  for (const auto& p : outputs)
    digests[p.filename().string()] = sha256_file(p);
  m["outputs"] = digests;
  write_json(prefix + ".manifest.json", m);
}

InterleaveStrategy strategy_arg(const std::string& s) {
  return parse_strategy(s);
}

// ---- compile-fft

int cmd_compile_fft(unsigned modes, unsigned radix, const std::string& strategy,
                    double penalty, const std::string& prefix) {
  const FFTPlan plan{modes, radix, strategy_arg(strategy), penalty};
  const Circuit c = compile_fft(plan);
  json side;
  side["modes"] = modes;
  side["radix"] = radix;
  side["interleave"] = strategy_name(plan.interleave);
  side["depth_penalty"] = penalty;
  side["two_qubit_gates"] = two_qubit_count(c);
  side["two_qubit_depth"] = two_qubit_depth(c);
  side["gates"] = c.size();
  json levels = json::array();
  if (modes > radix) {
    // the three reorderings around the top-level sub-transforms
    const unsigned m = modes / radix;
    for (unsigned n : {radix, m, radix}) {
      const Circuit r =
          interleave_circuit(interleave_permutation(modes, n), plan.interleave, penalty);
      levels.push_back({{"N", modes}, {"n", n}, {"two_qubit_gates", two_qubit_count(r)},
                        {"two_qubit_depth", two_qubit_depth(r)}});
    }
  }
  side["level1_interleaves"] = levels;
  const fs::path circ = prefix + ".circuit", meta = prefix + ".json";
  write_text(circ, write_circuit(c));
  write_json(meta, side);
  json cfg{{"modes", modes}, {"radix", radix}, {"interleave", strategy_name(plan.interleave)},
           {"depth_penalty", penalty}};
  write_manifest(prefix, "compile-fft", cfg, 0, {circ, meta});
  std::cout << "wrote " << circ.string() << " (" << two_qubit_count(c)
            << " two-qubit gates, depth " << two_qubit_depth(c) << ")\n";
  for (const auto& l : levels)
    std::cout << "  level-1 interleave " << l["N"] << "->" << l["n"] << ": "
              << l["two_qubit_gates"] << " two-qubit gates\n";
  return 0;
}

// ---- optimize-cz

int cmd_optimize_cz(const std::string& graph_file, unsigned n_total,
                    unsigned n_split, double penalty, const std::string& prefix) {
  CZGraph g = graph_file.empty()
                  ? interleave_cz_graph(interleave_permutation(n_total, n_split))
                  : read_edge_list_file(graph_file);
  const DecimationResult res = decimate_with_steps(g, penalty);
  const bool eq = verify_equivalence(res.circuit, g);
  json rep;
  rep["qubits"] = g.num_qubits();
  rep["gates_in"] = g.num_edges();
  rep["gates_out"] = two_qubit_count(res.circuit);
  rep["depth_out"] = two_qubit_depth(res.circuit);
  rep["depth_penalty"] = penalty;
  rep["equivalent"] = eq;
  json steps = json::array();
  for (const auto& s : res.steps)
    steps.push_back({{"rule", rule_name(s.rule)}, {"i", s.i}, {"j", s.j}});
  rep["steps"] = steps;
  const fs::path circ = prefix + ".circuit", meta = prefix + ".json";
  write_text(circ, write_circuit(res.circuit));
  write_json(meta, rep);
  json cfg{{"graph", graph_file.empty() ? "interleave " + std::to_string(n_total) +
                                              "/" + std::to_string(n_split)
                                        : graph_file},
           {"depth_penalty", penalty}};
  write_manifest(prefix, "optimize-cz", cfg, 0, {circ, meta});
  std::cout << "gates_in " << g.num_edges() << " gates_out "
            << two_qubit_count(res.circuit) << " depth "
            << two_qubit_depth(res.circuit) << " equivalent "
            << (eq ? "yes" : "no") << "\n";
  return eq ? 0 : 1;
}

// ---- simulate-spectral

SpectralGrid run_method(const std::string& m, const SimulateConfig& sc) {
  const ProtocolConfig& c = sc.protocol;
  if (m == "exact") return nk_exact_free(c, sc.omegas);
  if (m == "gaussian") return nk_gaussian(c, sc.omegas);
  if (m == "many-body") return nk_many_body(c, sc.omegas);
  if (m == "circuit") return run_circuit_protocol(c, sc.omegas);
  if (m == "strong-coupling") {
    SpectralGrid g = strong_coupling_leading(c, momentum_occupations(c), sc.omegas);
    return g;
  }
  if (m == "kernel") return lehmann_reference(c, sc.omegas);
  if (m == "correlation") return dynamical_correlation_baseline(c, sc.omegas);
  throw ConfigError("output.methods: unknown method '" + m + "'");
}

int cmd_simulate(const std::string& config_path, const std::string& prefix) {
  const SimulateConfig sc = load_simulate_config(config_path);
  std::ostringstream csv;
  csv << "k,omega,value,method\n";
  json meta;
  meta["config"] = protocol_json(sc.protocol);
  meta["omegas"] = sc.omegas;
  json methods = json::array();
  for (const auto& m : sc.methods) {
    const SpectralGrid g = run_method(m, sc);
    for (std::size_t i = 0; i < g.k.size(); ++i)
      for (std::size_t w = 0; w < g.omega.size(); ++w)
        csv << num(g.k[i]) << ',' << num(g.omega[w]) << ','
            << num(g.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(w)))
            << ',' << g.method << '\n';
    json e;
    e["method"] = g.method;
    e["min"] = g.min();
    e["max"] = g.max();
    e["negative_samples"] = g.count_below(-1e-12);
    e["notes"] = g.notes;
    methods.push_back(e);
  }
  meta["methods"] = methods;
  meta["columns"] = {"k", "omega", "value", "method"};
  const fs::path out_csv = prefix + ".csv", out_meta = prefix + ".json";
  write_text(out_csv, csv.str());
  write_json(out_meta, meta);
  json cfg = protocol_json(sc.protocol);
  cfg["omegas"] = sc.omegas;
  cfg["methods"] = sc.methods;
  write_manifest(prefix, "simulate-spectral", cfg, sc.protocol.seed, {out_csv, out_meta});
  std::cout << "wrote " << out_csv.string() << " and " << out_meta.string() << "\n";
  return 0;
}

// ---- compare-trotter

int cmd_compare(const std::string& config_path, const std::string& prefix) {
  const TrotterCompareConfig cc = load_compare_config(config_path);
  const TrotterCompareResult res = compare_trotter(cc);
  std::ostringstream csv;
  csv << "method,epsilon,steps,scale,mean_abs_error,max_error,min_sample,"
         "max_sample,negative_samples,occupations_in_unit_interval\n";
  std::cout << std::left << std::setw(12) << "method" << std::setw(9) << "epsilon"
            << std::setw(7) << "steps" << std::setw(14) << "mean_abs_err"
            << std::setw(14) << "max_err" << "negatives\n";
  for (const auto& r : res.rows) {
    csv << r.method << ',' << num(r.epsilon) << ',' << r.steps << ','
        << num(r.scale) << ',' << num(r.mean_abs_error) << ',' << num(r.max_error)
        << ',' << num(r.min_sample) << ',' << num(r.max_sample) << ','
        << r.negative_samples << ',' << (r.occupations_in_unit_interval ? 1 : 0)
        << '\n';
    std::cout << std::setw(12) << r.method << std::setw(9)
              << (std::isnan(r.epsilon) ? std::string("-") : num(r.epsilon))
              << std::setw(7) << r.steps << std::setw(14) << r.mean_abs_error
              << std::setw(14) << r.max_error << r.negative_samples << "\n";
  }
  std::ostringstream ref;
  ref << "k,omega,value,method\n";
  const SpectralGrid& g = res.reference;
  for (std::size_t i = 0; i < g.k.size(); ++i)
    for (std::size_t w = 0; w < g.omega.size(); ++w)
      ref << num(g.k[i]) << ',' << num(g.omega[w]) << ','
          << num(g.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(w)))
          << ',' << g.method << '\n';
  const fs::path out_csv = prefix + ".csv", out_ref = prefix + "_reference.csv";
  write_text(out_csv, csv.str());
  write_text(out_ref, ref.str());
  json cfg = protocol_json(cc.base);
  cfg["epsilons"] = cc.epsilons;
  cfg["steps"] = cc.steps;
  cfg["continuous"] = cc.continuous;
  cfg["omegas"] = cc.omegas;
  write_manifest(prefix, "compare-trotter", cfg, cc.base.seed, {out_csv, out_ref});
  return 0;
}

// ---- verify

int cmd_verify(bool quick) {
  std::vector<CheckResult> all = oracle_checks();
  for (auto& r : acceptance_checks(!quick)) all.push_back(r);
  bool ok = true;
  for (const auto& r : all) {
    ok = ok && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail
              << "\n";
  }
  std::cout << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? 0 : 1;
}

// ---- report

int cmd_report(const std::string& prefix) {
  std::ostringstream csv;
  csv << "modes,radix,interleave,fft_two_qubit_gates,fft_two_qubit_depth,"
         "interleave_two_qubit_gates,interleave_two_qubit_depth\n";
  std::cout << std::left << std::setw(7) << "modes" << std::setw(16) << "interleave"
            << std::setw(10) << "fft_2q" << std::setw(12) << "fft_depth"
            << std::setw(10) << "il_2q" << "il_depth\n";
  for (unsigned n : {4u, 8u, 9u, 16u, 27u, 32u, 64u, 81u}) {
    const unsigned radix = *compilable_radix(n);
    for (InterleaveStrategy s : all_strategies()) {
      if (s == InterleaveStrategy::ImportedSequence && n != 9 && n != 27) continue;
      const Circuit c = compile_fft({n, radix, s});
      const Circuit il = interleave_circuit(interleave_permutation(n, radix), s);
      csv << n << ',' << radix << ',' << strategy_name(s) << ',' << two_qubit_count(c)
          << ',' << two_qubit_depth(c) << ',' << two_qubit_count(il) << ','
          << two_qubit_depth(il) << '\n';
      std::cout << std::setw(7) << n << std::setw(16) << strategy_name(s)
                << std::setw(10) << two_qubit_count(c) << std::setw(12)
                << two_qubit_depth(c) << std::setw(10) << two_qubit_count(il)
                << two_qubit_depth(il) << "\n";
    }
  }
  const fs::path out = prefix + ".csv";
  write_text(out, csv.str());
  write_manifest(prefix, "report", json::object(), 0, {out});
  return 0;
}

void apply_thread_override() {
  if (const char* v = std::getenv("FERMISPEC_THREADS")) {
    int n = std::atoi(v);
    if (n > 0) omp_set_num_threads(n);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermionic Fourier transform compiler and spectral-function simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* fft = app.add_subcommand("compile-fft", "compile a fermionic Fourier transform");
  unsigned modes = 8, radix = 0;
  std::string strategy = "graph-decimated", prefix = "fft";
  double penalty = kDefaultDepthPenalty;
  fft->add_option("--modes", modes, "number of modes")->required();
  fft->add_option("--radix", radix, "2 or 3 (default: inferred)");
  fft->add_option("--interleave", strategy, "local-fswap, cx-ladder, graph-decimated or imported");
  fft->add_option("--depth-penalty", penalty, "decimation depth penalty");
  fft->add_option("--out", prefix, "output prefix");

  auto* opt = app.add_subcommand("optimize-cz", "decimate a CZ graph into a short circuit");
  std::string graph_file;
  unsigned il_total = 9, il_split = 3;
  std::string opt_prefix = "cz";
  opt->add_option("--graph", graph_file, "edge-list file (default: interleave graph)");
  opt->add_option("--interleave-modes", il_total, "interleave graph size");
  opt->add_option("--interleave-split", il_split, "interleave block count");
  opt->add_option("--depth-penalty", penalty, "decimation depth penalty");
  opt->add_option("--out", opt_prefix, "output prefix");

  auto* sim = app.add_subcommand("simulate-spectral", "compute <n(k)> on a (k, omega) grid");
  std::string sim_config, sim_prefix = "spectral";
  sim->add_option("--config", sim_config, "INI config file")->required();
  sim->add_option("--out", sim_prefix, "output prefix");

  auto* cmp = app.add_subcommand("compare-trotter", "Trotter error of both methods");
  std::string cmp_config, cmp_prefix = "trotter";
  cmp->add_option("--config", cmp_config, "INI config file")->required();
  cmp->add_option("--out", cmp_prefix, "output prefix");

  auto* ver = app.add_subcommand("verify", "run the oracle-equivalence suite");
  bool quick = false;
  ver->add_flag("--quick", quick, "skip the slow Trotter comparison");

  auto* rep = app.add_subcommand("report", "gate counts and depths across strategies");
  std::string rep_prefix = "report";
  rep->add_option("--out", rep_prefix, "output prefix");

  CLI11_PARSE(app, argc, argv);
  apply_thread_override();

  try {
    if (*fft) {
      if (radix == 0) {
        auto r = compilable_radix(modes);
        if (!r) throw std::invalid_argument("--modes: no radix 2 or 3 factorisation");
        radix = *r;
      }
      return cmd_compile_fft(modes, radix, strategy, penalty, prefix);
    }
    if (*opt) return cmd_optimize_cz(graph_file, il_total, il_split, penalty, opt_prefix);
    if (*sim) return cmd_simulate(sim_config, sim_prefix);
    if (*cmp) return cmd_compare(cmp_config, cmp_prefix);
    if (*ver) return cmd_verify(quick);
    if (*rep) return cmd_report(rep_prefix);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
