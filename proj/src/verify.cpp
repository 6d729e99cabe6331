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

#include "fermispec/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "fermispec/baseline.hpp"
#include "fermispec/fft_compiler.hpp"
#include "fermispec/interleave.hpp"
#include "fermispec/mode_transform.hpp"
#include "fermispec/protocol.hpp"
#include "fermispec/spectral.hpp"
#include "fermispec/statevector.hpp"
#include "fermispec/tableau.hpp"
#include "fermispec/trotter_compare.hpp"

namespace fermispec {

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_abs_diff(const SpectralGrid& a, const SpectralGrid& b) {
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

unsigned count_kind(const Circuit& c, GateKind k) {
  unsigned n = 0;
  for (const Gate& g : c.gates()) n += g.kind == k;
  return n;
}

Circuit relabelled(const Circuit& c, const std::vector<unsigned>& map) {
  Circuit out(c.num_qubits());
  out.append(c, map);
  return out;
}

CZGraph random_graph(unsigned n, unsigned edges, std::mt19937_64& rng) {
  CZGraph g(n);
  std::uniform_int_distribution<unsigned> q(0, n - 1);
  const unsigned max_edges = n * (n - 1) / 2;
  edges = std::min(edges, max_edges);
  while (g.num_edges() < edges) {
    unsigned a = q(rng), b = q(rng);
    if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
  }
  return g;
}

// half filling ring, Empty unless told otherwise
ProtocolConfig free_config(unsigned n, double eps, double t) {
  ProtocolConfig c;
  c.N = n;
  c.epsilon = eps;
  c.t = t;
  c.nu = 1.0;
  return c;
}

}  // namespace

CheckResult run_check(const std::string& name,
                      const std::function<bool(std::string&)>& fn) {
  CheckResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.passed = fn(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

CheckResult check_fft_transfer_matrices() {
  auto r = run_check("fft_transfer_matrix", [](std::string& d) {
    double worst = 0.0;
    unsigned circuits = 0;
    for (unsigned n : {2u, 3u, 4u, 8u, 9u, 27u}) {
      const unsigned radix = *compilable_radix(n);
      for (InterleaveStrategy s : all_strategies()) {
        if (s == InterleaveStrategy::ImportedSequence && n != 9 && n != 27)
          continue;
        const Circuit c = compile_fft({n, radix, s});
        const double e =
            max_error_up_to_phase(sparse_mode_transform(c).matrix, dft_matrix(n));
        worst = std::max(worst, e);
        ++circuits;
      }
    }
    d = std::to_string(circuits) + " circuits, max entry error " + fmt(worst);
    return worst < 1e-9;
  });
  r.passed = r.passed && r.seconds < 10.0;
  r.detail += ", " + fmt(r.seconds) + " s (budget 10 s)";
  return r;
}

CheckResult check_base_gate_counts() {
  return run_check("base_fft_gate_counts", [](std::string& d) {
    const unsigned f2 = two_qubit_count(base_fft(2));
    const unsigned f3 = two_qubit_count(base_fft(3));
    d = "F2 " + std::to_string(f2) + " (want 2), F3 " + std::to_string(f3) +
        " (want 6)";
    return f2 == 2 && f3 == 6;
  });
}

CheckResult check_interleave_27() {
  auto r = run_check("interleave_27_tableaux", [](std::string& d) {
    const InterleavePermutation p = interleave_permutation(27, 3);
    const Circuit listing = imported_interleave_listing(27);
    const unsigned cx = count_kind(listing, GateKind::CX);
    const unsigned cz = count_kind(listing, GateKind::CZ);
    const std::vector<unsigned> order = p.order();
    // all three in source labels
    const StabilizerTableau t_list = tableau_of(relabelled(listing, order));
    const StabilizerTableau t_ladder = tableau_of(cx_ladder_interleave(27, 3));
    const StabilizerTableau t_graph =
        tableau_of(relabelled(interleave_cz_graph(p).circuit(), order));
    const bool eq = t_list == t_graph && t_ladder == t_graph;
    d = "listing " + std::to_string(cx) + " CX + " + std::to_string(cz) +
        " CZ, tableaux " + (eq ? "equal" : "differ");
    return eq && cx == 26 && cz == 34;
  });
  r.passed = r.passed && r.seconds < 1.0;
  r.detail += ", " + fmt(r.seconds) + " s (budget 1 s)";
  return r;
}

CheckResult check_decimation() {
  return run_check("cz_graph_decimation", [](std::string& d) {
    const CZGraph g9 = interleave_cz_graph(interleave_permutation(9, 3));
    const Circuit out9 = decimate(g9);
    const Circuit listing9 = imported_interleave_listing(9);
    const bool eq9 = tableau_of(out9) == tableau_of(listing9) &&
                     verify_equivalence(out9, g9);
    const unsigned gates9 = two_qubit_count(out9);
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<unsigned> nq(2, 10), ne(0, 20);
    unsigned bad = 0, over = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const unsigned n = nq(rng);
      const CZGraph g = random_graph(n, ne(rng), rng);
      const Circuit c = decimate(g);
      const double e = phase_distance(circuit_unitary(c), circuit_unitary(g.circuit()));
      worst = std::max(worst, e);
      bad += e > 1e-9;
      over += two_qubit_count(c) > g.num_edges();
    }
    d = "9-qubit graph -> " + std::to_string(gates9) + " gates (limit 9), " +
        (eq9 ? "equivalent" : "NOT equivalent") + " to listing; 50 random: " +
        std::to_string(bad) + " mismatches (max dist " + fmt(worst) + "), " +
        std::to_string(over) + " above edge count";
    return eq9 && gates9 <= 9 && bad == 0 && over == 0;
  });
}

CheckResult check_free_oracles() {
  auto r = run_check("free_fermion_oracles", [](std::string& d) {
    const std::vector<double> w = linspace(-3.0, 3.0, 50);
    double worst = 0.0;
    for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full})
      for (double eps : {0.1, kPi / 5.0}) {
        ProtocolConfig c = free_config(50, eps, 5.0);
        c.fill = fill;
        worst = std::max(worst, max_abs_diff(nk_gaussian(c, w), nk_exact_free(c, w)));
      }
    // N = 200 panels
    const std::vector<double> w2 = linspace(-3.0, 3.0, 9);
    double worst2 = 0.0;
    for (double eps : {0.01, kPi / 5.0, 1.5 * kPi / 5.0}) {
      ProtocolConfig c = free_config(200, eps, 5.0);
      worst2 = std::max(worst2, max_abs_diff(nk_gaussian(c, w2), nk_exact_free(c, w2)));
    }
    d = "N=50 50x50 max diff " + fmt(worst) + " (tol 1e-10), N=200 panels " +
        fmt(worst2);
    return worst < 1e-10 && worst2 < 1e-10;
  });
  r.passed = r.passed && r.seconds < 60.0;
  r.detail += ", " + fmt(r.seconds) + " s (budget 60 s)";
  return r;
}

CheckResult check_perturbative_scaling() {
  return run_check("perturbative_scaling", [](std::string& d) {
    const std::vector<double> w = default_omega_grid(1.0);
    const std::vector<double> eps{1e-2, 1e-3, 1e-4};
    ProtocolConfig c = free_config(12, 0.0, 5.0);
    const SpectralGrid ref = convolve_kernel(
        free_particle_spectrum(c.N, c.nu, momentum_occupations(c)), Kernel{c.t}, w);
    std::vector<double> err;
    for (double e : eps) {
      c.epsilon = e;
      const SpectralGrid g = nk_gaussian(c, w);
      err.push_back((g.values / (e * e) - ref.values).cwiseAbs().maxCoeff());
    }
    const double slope =
        (std::log(err.front()) - std::log(err.back())) /
        (std::log(eps.front()) - std::log(eps.back()));
    d = "errors " + fmt(err[0]) + ", " + fmt(err[1]) + ", " + fmt(err[2]) +
        "; slope " + fmt(slope) + " (want 2 +- 0.2)";
    return std::abs(slope - 2.0) <= 0.2;
  });
}

CheckResult check_ghost_bound() {
  return run_check("ghost_band_bound", [](std::string& d) {
    const double t = 5.0, eps = kPi / t;
    const BroadeningGhosts bg = broadening_and_ghosts(eps, t);
    const SecondaryPeak sp = secondary_peak(eps, t);
    d = "r " + fmt(bg.ratio_r) + " (want 1/9), secondary/main " +
        fmt(sp.relative_height) + " at offset " + fmt(sp.offset) + " (limit 0.12)";
    return std::abs(bg.ratio_r - 1.0 / 9.0) < 1e-15 && sp.relative_height <= 0.12;
  });
}

CheckResult check_strong_coupling() {
  return run_check("strong_coupling_exact", [](std::string& d) {
    const std::vector<double> w = linspace(-3.0, 3.0, 41);
    double worst = 0.0;
    for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full})
      for (double eps : {0.3, kPi / 5.0, 1.7}) {
        ProtocolConfig c = free_config(10, eps, 5.0);
        c.nu = 0.0;
        c.fill = fill;
        c.initial = InitialState::Occupations;
        c.rho = {1, 0, 1, 1, 0, 0, 1, 0, 1, 1};
        const Eigen::VectorXd rho = momentum_occupations(c);
        worst = std::max(worst, max_abs_diff(nk_gaussian(c, w),
                                             strong_coupling_leading(c, rho, w)));
      }
    d = "max diff " + fmt(worst) + " (tol 1e-12)";
    return worst < 1e-12;
  });
}

CheckResult check_trotter_comparison() {
  auto r = run_check("trotter_comparison", [](std::string& d) {
    const TrotterCompareConfig cfg;
    const TrotterCompareResult res = compare_trotter(cfg);
    // below 16 steps (dt > 0.31) both methods carry O(1) errors
    constexpr unsigned kLo = 16, kHi = 50;
    bool wins = true, unit = true, negatives = false;
    unsigned compared = 0;
    std::ostringstream s;
    for (const TrotterErrorRow& base : res.rows)
      if (base.method == "correlation" && base.steps > 0)
        negatives = negatives || base.negative_samples > 0;
    for (const TrotterErrorRow& env : res.rows) {
      if (env.method != "environment") continue;
      unit = unit && env.occupations_in_unit_interval && env.min_sample >= -1e-12;
      if (env.steps < kLo || env.steps > kHi) continue;
      for (const TrotterErrorRow& base : res.rows)
        if (base.method == "correlation" && base.steps == env.steps) {
          wins = wins && env.mean_abs_error < base.mean_abs_error;
          ++compared;
          s << " s" << env.steps << " " << fmt(env.mean_abs_error) << "/"
            << fmt(base.mean_abs_error) << "(" << base.negative_samples
            << " neg)";
        }
    }
    d = "mean error env/baseline:" + s.str() + "; env in [0,1] " +
        (unit ? "yes" : "no") + "; baseline negatives " + (negatives ? "yes" : "no");
    return compared > 0 && wins && unit && negatives;
  });
  r.passed = r.passed && r.seconds < 1800.0;
  r.detail += ", " + fmt(r.seconds) + " s (budget 1800 s)";
  return r;
}

std::vector<CheckResult> acceptance_checks(bool include_slow) {
  std::vector<CheckResult> out{
      check_fft_transfer_matrices(), check_base_gate_counts(),
      check_interleave_27(),         check_decimation(),
      check_free_oracles(),          check_perturbative_scaling(),
      check_ghost_bound(),           check_strong_coupling()};
  if (include_slow) out.push_back(check_trotter_comparison());
  return out;
}

std::vector<CheckResult> oracle_checks() {
  std::vector<CheckResult> out;
  const std::vector<double> w = linspace(-2.5, 2.5, 7);

  out.push_back(run_check("circuit_vs_gaussian_n6", [&](std::string& d) {
    double worst = 0.0;
    for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full}) {
      ProtocolConfig c = free_config(6, 0.3, 5.0);
      c.fill = fill;
      c.trotter_steps = 400;
      worst = std::max(worst, max_abs_diff(run_circuit_protocol(c, w), nk_gaussian(c, w)));
    }
    d = "max diff " + fmt(worst) + " (tol 1e-4)";
    return worst < 1e-4;
  }));

  out.push_back(run_check("circuit_vs_sector_engine", [&](std::string& d) {
    double worst = 0.0;
    for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full})
      for (unsigned n : {3u, 4u, 5u}) {
        ProtocolConfig c = free_config(n, 0.4, 3.0);
        c.V = 2.0;
        c.fill = fill;
        c.trotter_steps = 7;
        worst = std::max(worst, max_abs_diff(run_circuit_protocol(c, w), nk_many_body(c, w)));
      }
    d = "max diff " + fmt(worst) + " (tol 1e-10)";
    return worst < 1e-10;
  }));

  out.push_back(run_check("sector_engine_vs_gaussian", [&](std::string& d) {
    double worst = 0.0;
    for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full}) {
      ProtocolConfig c = free_config(6, 0.5, 4.0);
      c.fill = fill;
      worst = std::max(worst, max_abs_diff(nk_many_body(c, w), nk_gaussian(c, w)));
    }
    d = "max diff " + fmt(worst) + " (tol 1e-9)";
    return worst < 1e-9;
  }));

  out.push_back(run_check("empty_full_symmetry", [&](std::string& d) {
    ProtocolConfig c = free_config(8, 0.6, 5.0);
    c.initial = InitialState::Occupations;
    c.rho = {0.2, 0.9, 0.5, 0.0, 1.0, 0.3, 0.7, 0.4};
    const SpectralGrid e = nk_gaussian(c, w);
    // the filled environment reads holes, so it sees 1 - rho
    c.fill = EnvironmentFill::Full;
    for (double& r : c.rho) r = 1.0 - r;
    const SpectralGrid f = nk_gaussian(c, w);
    const double diff = max_abs_diff(e, f);
    d = "max diff " + fmt(diff) + " (tol 1e-12)";
    return diff < 1e-12;
  }));

  out.push_back(run_check("sum_rule", [&](std::string& d) {
    ProtocolConfig c = free_config(6, 1e-3, 5.0);
    c.nu = 0.0;
    c.initial = InitialState::Occupations;
    c.rho = {0.1, 0.4, 1.0, 0.0, 0.75, 0.5};
    const Eigen::VectorXd rho = momentum_occupations(c);
    const unsigned q = 400001;
    const double span = 2000.0, h = 2 * span / (q - 1);
    const SpectralGrid g = strong_coupling_leading(c, rho, linspace(-span, span, q));
    double worst = 0.0;
    for (unsigned m = 0; m < c.N; ++m) {
      double acc = 0.0;
      for (unsigned i = 0; i < q; ++i)
        acc += g.values(m, i) * (i == 0 || i == q - 1 ? 1.0 : (i % 2 ? 4.0 : 2.0));
      acc *= h / 3.0;
      // the tails beyond the window add 2 * (1/2) / span each side
      const double integral = (acc / (c.epsilon * c.epsilon) + rho(m) / span) / (2 * kPi);
      worst = std::max(worst, std::abs(4.0 * integral / c.t - rho(m)));
    }
    d = "max deviation " + fmt(worst) + " (tol 1e-3)";
    return worst < 1e-3;
  }));

  out.push_back(run_check("baseline_vs_kernel", [&](std::string& d) {
    double worst = 0.0;
    for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full}) {
      ProtocolConfig c = free_config(7, 0.1, 5.0);
      c.fill = fill;
      const SpectralGrid a = dynamical_correlation_baseline(c, w);
      const SpectralGrid b = lehmann_reference(c, w);
      worst = std::max(worst, max_abs_diff(a, b));
    }
    d = "max diff " + fmt(worst) + " (tol 1e-6)";
    return worst < 1e-6;
  }));

  out.push_back(run_check("lehmann_vs_free_lines", [&](std::string& d) {
    double worst = 0.0;
    for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full}) {
      ProtocolConfig c = free_config(6, 0.1, 5.0);
      c.fill = fill;
      c.particles = 3;
      const SpectralGrid ed = lehmann_reference(c, w);
      c.particles = -1;
      const SpectralGrid free = lehmann_reference(c, w);
      worst = std::max(worst, max_abs_diff(ed, free));
    }
    d = "max diff " + fmt(worst) + " (tol 1e-10)";
    return worst < 1e-10;
  }));

  out.push_back(run_check("broadening_zero", [&](std::string& d) {
    double worst = 0.0;
    for (double eps : {0.2, 0.9, 1.6}) {
      ProtocolConfig c = free_config(5, eps, 5.0);
      const BroadeningGhosts bg = broadening_and_ghosts(eps, c.t);
      const double centre = 2.0 * c.nu * std::cos(momentum_grid(c.N)[0]);
      const SpectralGrid g = nk_exact_free(c, {centre + bg.delta_omega});
      worst = std::max(worst, std::abs(g.values(0, 0)));
    }
    d = "max value at predicted zero " + fmt(worst) + " (tol 1e-12)";
    return worst < 1e-12;
  }));

  out.push_back(run_check("protocol_outputs_in_unit_interval", [&](std::string& d) {
    double lo = 1.0, hi = 0.0;
    for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full})
      for (unsigned steps : {1u, 2u, 5u}) {
        ProtocolConfig c = free_config(5, 1.2, 5.0);
        c.V = 3.0;
        c.fill = fill;
        c.trotter_steps = steps;
        const SpectralGrid g = run_circuit_protocol(c, w);
        lo = std::min(lo, g.min());
        hi = std::max(hi, g.max());
      }
    d = "range [" + fmt(lo) + ", " + fmt(hi) + "]";
    return lo >= -1e-12 && hi <= 1.0 + 1e-12;
  }));
  return out;
}

}  // namespace fermispec
