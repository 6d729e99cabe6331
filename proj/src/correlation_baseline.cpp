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

#include "fermispec/baseline.hpp"

#include <cmath>

#include "fermispec/protocol.hpp"

namespace fermispec {

namespace {

bool particle_side(const ProtocolConfig& cfg) {
  return cfg.fill == EnvironmentFill::Empty;
}

bool use_free_lines(const ProtocolConfig& cfg) {
  return cfg.V == 0.0 &&
         (cfg.particles < 0 || cfg.initial == InitialState::Occupations);
}

/** g(v) on the given times, one row per momentum. */
Eigen::MatrixXcd correlation_exact(const ProtocolConfig& cfg,
                                   const std::vector<double>& times) {
  const DeltaSpectrum lines = lehmann_spectrum(cfg);
  const unsigned n = cfg.N;
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, static_cast<Eigen::Index>(times.size()));
  // both sides oscillate as exp(i centre v)
  for (unsigned m = 0; m < n; ++m)
    for (const auto& line : lines.lines[m])
      for (std::size_t i = 0; i < times.size(); ++i)
        g(m, i) += line.weight * std::polar(1.0, line.center * times[i]);
  return g;
}

Eigen::MatrixXcd correlation_trotter(const ProtocolConfig& cfg) {
  const unsigned n = cfg.N, steps = cfg.trotter_steps;
  const auto terms = trotter_step_terms(cfg, cfg.t / steps, false);
  const FockState e = initial_system_state(cfg).state;
  const auto id = identity_layout(n);
  const bool plus = particle_side(cfg);
  Eigen::MatrixXcd g(n, steps + 1);
  for (unsigned m = 0; m < n; ++m) {
    const Eigen::VectorXcd ck = momentum_mode(n, m, id, n);
    FockState a = e;
    if (plus) {
      if (e.basis.particles() == 0) {
        g.row(m).setZero();
        continue;
      }
      // <U E| c^dag(k) |U c(k) E>
      FockState b = annihilate(e, ck);
      for (unsigned s = 0;; ++s) {
        g(m, s) = inner(annihilate(a, ck), b);
        if (s == steps) break;
        apply_terms(a, terms);
        apply_terms(b, terms);
      }
    } else {
      if (e.basis.particles() == n) {
        g.row(m).setZero();
        continue;
      }
      // <U c^dag(k) E| c^dag(k) |U E>
      FockState b = create(e, ck.conjugate());
      for (unsigned s = 0;; ++s) {
        g(m, s) = inner(b, create(a, ck.conjugate()));
        if (s == steps) break;
        apply_terms(a, terms);
        apply_terms(b, terms);
      }
    }
  }
  return g;
}

}  // namespace

DeltaSpectrum lehmann_spectrum(const ProtocolConfig& cfg) {
  cfg.validate();
  const unsigned n = cfg.N;
  if (use_free_lines(cfg)) {
    const Eigen::VectorXd rho = momentum_occupations(cfg);
    return particle_side(cfg) ? free_particle_spectrum(n, cfg.nu, rho)
                              : free_hole_spectrum(n, cfg.nu, rho);
  }
  const SystemGroundState gs = initial_system_state(cfg);
  const unsigned p = gs.state.basis.particles();
  DeltaSpectrum out;
  out.k = momentum_grid(n);
  out.lines.resize(n);
  const bool plus = particle_side(cfg);
  if ((plus && p == 0) || (!plus && p == n)) return out;
  const SectorBasis target(n, plus ? p - 1 : p + 1);
  const SectorSpectrum sp = diagonalize(ring_hamiltonian(n, cfg.nu, cfg.V), target);
  const auto id = identity_layout(n);
  for (unsigned m = 0; m < n; ++m) {
    const Eigen::VectorXcd ck = momentum_mode(n, m, id, n);
    const FockState moved = plus ? annihilate(gs.state, ck)
                                 : create(gs.state, ck.conjugate());
    const Eigen::VectorXcd overlaps = sp.vectors.adjoint() * moved.amp;
    for (Eigen::Index i = 0; i < overlaps.size(); ++i) {
      const double w = std::norm(overlaps(i));
      if (w < 1e-15) continue;
      const double centre =
          plus ? gs.energy - sp.energies(i) : sp.energies(i) - gs.energy;
      out.lines[m].push_back({centre, w});
    }
  }
  return out;
}

SpectralGrid lehmann_reference(const ProtocolConfig& cfg,
                               const std::vector<double>& omegas) {
  SpectralGrid g = convolve_kernel(lehmann_spectrum(cfg), Kernel{cfg.t}, omegas);
  g.method = "lehmann";
  g.config = cfg;
  return g;
}

SpectralGrid dynamical_correlation_baseline(const ProtocolConfig& cfg,
                                            const std::vector<double>& omegas) {
  cfg.validate();
  const unsigned n = cfg.N;
  std::vector<double> times, weights;
  Eigen::MatrixXcd g;
  if (cfg.trotter_steps == 0) {
    const unsigned q = cfg.quadrature_points;
    times = linspace(0.0, cfg.t, q);
    const double h = cfg.t / (q - 1);
    weights.assign(q, 0.0);
    for (unsigned i = 0; i < q; ++i)
      weights[i] = h / 3.0 * (i == 0 || i == q - 1 ? 1.0 : (i % 2 ? 4.0 : 2.0));
    g = correlation_exact(cfg, times);
  } else {
    const unsigned s = cfg.trotter_steps;
    times = linspace(0.0, cfg.t, s + 1);
    const double h = cfg.t / s;
    weights.assign(s + 1, h);
    weights.front() = weights.back() = h / 2;
    g = correlation_trotter(cfg);
  }
  const Kernel kern{cfg.t};
  SpectralGrid out = make_grid(cfg, omegas,
                               cfg.trotter_steps == 0 ? "correlation-exact"
                                                      : "correlation-trotter");
  for (unsigned m = 0; m < n; ++m)
    for (std::size_t w = 0; w < omegas.size(); ++w) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < times.size(); ++i)
        acc += weights[i] * kern.window(times[i]) *
               std::polar(1.0, -omegas[w] * times[i]) * g(m, i);
      out.values(m, w) = 2.0 * acc.real();
    }
  out.notes["negative_samples"] = std::to_string(out.count_below(-1e-12));
  return out;
}

}  // namespace fermispec
