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

#include "fermispec/protocol.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fermispec/fft_compiler.hpp"
#include "fermispec/interleave.hpp"

namespace fermispec {

namespace {

using u64 = std::uint64_t;
constexpr double kPi = std::numbers::pi;
const cplx I{0.0, 1.0};

inline double parity_sign(u64 x) { return (std::popcount(x) & 1) ? -1.0 : 1.0; }

inline u64 below(unsigned q) { return (u64{1} << q) - 1; }

inline u64 between(unsigned a, unsigned b) {
  if (a > b) std::swap(a, b);
  return below(b) & ~below(a + 1);
}

Eigen::MatrixXcd fourier_rows(unsigned n) {
  Eigen::MatrixXcd f(n, n);
  const auto k = momentum_grid(n);
  for (unsigned m = 0; m < n; ++m)
    for (unsigned j = 0; j < n; ++j)
      f(m, j) = std::polar(1.0 / std::sqrt(double(n)), -k[m] * double(j));
  return f;
}

/** <d^dag(k) d(k)> from the real-space correlation matrix. */
Eigen::VectorXd momentum_density(const Eigen::MatrixXcd& corr) {
  const unsigned n = static_cast<unsigned>(corr.rows());
  Eigen::MatrixXcd f = fourier_rows(n);
  Eigen::MatrixXcd nk = f.conjugate() * corr * f.transpose();
  return nk.diagonal().real();
}

/** Interleave strategy usable for an (N, radix) reordering. */
InterleaveStrategy usable_strategy(InterleaveStrategy s, unsigned n,
                                   unsigned radix) {
  if (s == InterleaveStrategy::ImportedSequence &&
      !(radix == 3 && (n == 9 || n == 27)))
    return InterleaveStrategy::GraphDecimated;
  return s;
}

/** Gate list on qubits, addressed through mode positions. */
class LayoutBuilder {
 public:
  explicit LayoutBuilder(unsigned n) : circ_(n), layout_(identity_layout(n)) {}

  void add(Gate g) {
    for (unsigned i = 0; i < g.arity(); ++i) g.qubits[i] = layout_[g.qubits[i]];
    if (g.arity() == 1) g.qubits[1] = g.qubits[0];
    circ_.add(g);
  }

  /**
   * Runs sub on the increasing positions pos: local mode p of sub is global
   * position pos[p].
   */
  void append(const Circuit& sub, const std::vector<unsigned>& pos) {
    const unsigned n = sub.num_qubits();
    std::vector<unsigned> map(n);
    for (unsigned p = 0; p < n; ++p) map[sub.input_layout()[p]] = layout_[pos[p]];
    circ_.append(sub, map);
    for (unsigned p = 0; p < n; ++p)
      layout_[pos[p]] = map[sub.output_layout()[p]];
  }

  void append(const Circuit& sub) {
    append(sub, identity_layout(sub.num_qubits()));
  }

  const std::vector<unsigned>& layout() const { return layout_; }
  Circuit& circuit() { return circ_; }

 private:
  Circuit circ_;
  std::vector<unsigned> layout_;
};

}  // namespace

std::vector<TrotterTerm> trotter_step_terms(const ProtocolConfig& cfg,
                                            double dt, bool with_environment) {
  using K = TrotterTerm::Kind;
  const unsigned n = cfg.N;
  auto site = [&](unsigned j) { return with_environment ? 2 * j : j; };
  std::vector<TrotterTerm> out;
  if (cfg.nu != 0.0)
    for (unsigned parity = 0; parity < 2; ++parity)
      for (unsigned j = parity; j < n; j += 2)
        out.push_back({K::Hop, site(j), site((j + 1) % n), cfg.nu * dt});
  if (cfg.V != 0.0)
    for (unsigned j = 0; j < n; ++j)
      out.push_back({K::Density, site(j), site((j + 1) % n), cfg.V * dt});
  if (with_environment) {
    if (cfg.epsilon != 0.0)
      for (unsigned j = 0; j < n; ++j)
        out.push_back({K::Hop, 2 * j, 2 * j + 1, 0.5 * cfg.epsilon * dt});
    if (cfg.omega != 0.0)
      for (unsigned j = 0; j < n; ++j)
        out.push_back({K::Number, 2 * j + 1, 2 * j + 1, cfg.omega * dt});
  }
  return out;
}

Circuit trotter_terms_circuit(const std::vector<TrotterTerm>& terms,
                              unsigned num_modes) {
  Circuit c(num_modes);
  for (const auto& term : terms) {
    switch (term.kind) {
      case TrotterTerm::Kind::Hop: {
        // bring the upper mode next to the lower one with fermionic swaps
        const unsigned a = std::min(term.a, term.b);
        const unsigned b = std::max(term.a, term.b);
        for (unsigned q = b - 1; q > a; --q) c.add(Gate::fswap(q, q + 1));
        c.add(Gate::givens(-term.angle, a, a + 1));
        for (unsigned q = a + 1; q < b; ++q) c.add(Gate::fswap(q, q + 1));
        break;
      }
      case TrotterTerm::Kind::Number:
        c.add(Gate::rz(-term.angle, term.a));
        break;
      case TrotterTerm::Kind::Density:
        c.add(Gate::rz(-term.angle / 2, term.a));
        c.add(Gate::rz(-term.angle / 2, term.b));
        c.add(Gate::cx(term.a, term.b));
        c.add(Gate::rz(term.angle / 2, term.b));
        c.add(Gate::cx(term.a, term.b));
        break;
    }
  }
  return c;
}

FermionHamiltonian protocol_hamiltonian(const ProtocolConfig& cfg,
                                        bool with_environment) {
  const unsigned n = cfg.N;
  auto site = [&](unsigned j) { return with_environment ? 2 * j : j; };
  FermionHamiltonian h(with_environment ? 2 * n : n);
  for (unsigned j = 0; j < n; ++j) {
    const unsigned a = site(j), b = site((j + 1) % n);
    if (cfg.nu != 0.0) h.add_hopping(a, b, cfg.nu);
    if (cfg.V != 0.0) h.add_density(a, b, cfg.V);
  }
  if (with_environment)
    for (unsigned j = 0; j < n; ++j) {
      if (cfg.epsilon != 0.0) h.add_hopping(2 * j, 2 * j + 1, 0.5 * cfg.epsilon);
      if (cfg.omega != 0.0) h.add_number(2 * j + 1, cfg.omega);
    }
  return h;
}

FockState FockState::vacuum(unsigned num_modes) {
  FockState s{SectorBasis(num_modes, 0), Eigen::VectorXcd::Ones(1)};
  return s;
}

void apply_term(FockState& s, const TrotterTerm& term) {
  const auto& basis = s.basis;
  const long dim = static_cast<long>(basis.size());
  const u64 ma = u64{1} << term.a, mb = u64{1} << term.b;
  switch (term.kind) {
    case TrotterTerm::Kind::Hop: {
      const double co = std::cos(term.angle), si = std::sin(term.angle);
      const u64 mid = between(term.a, term.b);
#pragma omp parallel for if (dim > 4096)
      for (long i = 0; i < dim; ++i) {
        const u64 x = basis.state(i);
        if (!(x & ma) || (x & mb)) continue;
        const std::size_t j = basis.index(x ^ ma ^ mb);
        const double sg = parity_sign(x & mid);
        const cplx px = s.amp(i), py = s.amp(j);
        s.amp(i) = co * px - I * (sg * si) * py;
        s.amp(j) = co * py - I * (sg * si) * px;
      }
      break;
    }
    case TrotterTerm::Kind::Number: {
      const cplx ph = std::polar(1.0, -term.angle);
      for (long i = 0; i < dim; ++i)
        if (basis.state(i) & ma) s.amp(i) *= ph;
      break;
    }
    case TrotterTerm::Kind::Density: {
      const cplx ph = std::polar(1.0, -term.angle);
      for (long i = 0; i < dim; ++i) {
        const u64 x = basis.state(i);
        if ((x & ma) && (x & mb)) s.amp(i) *= ph;
      }
      break;
    }
  }
}

void apply_terms(FockState& s, const std::vector<TrotterTerm>& terms) {
  for (const auto& t : terms) apply_term(s, t);
}

FockState annihilate(const FockState& s, const Eigen::VectorXcd& coef) {
  const unsigned m = s.basis.num_modes();
  if (s.basis.particles() == 0 || coef.size() != static_cast<Eigen::Index>(m))
    throw std::invalid_argument("annihilate: empty state or wrong size");
  FockState out{SectorBasis(m, s.basis.particles() - 1), {}};
  out.amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(out.basis.size()));
  const long dim = static_cast<long>(out.basis.size());
#pragma omp parallel for if (dim > 4096)
  for (long i = 0; i < dim; ++i) {
    const u64 y = out.basis.state(i);
    cplx acc = 0.0;
    for (unsigned j = 0; j < m; ++j) {
      if ((y >> j & 1) || coef(j) == 0.0) continue;
      const u64 x = y | (u64{1} << j);
      acc += coef(j) * parity_sign(x & below(j)) * s.amp(s.basis.index(x));
    }
    out.amp(i) = acc;
  }
  return out;
}

FockState create(const FockState& s, const Eigen::VectorXcd& coef) {
  const unsigned m = s.basis.num_modes();
  if (s.basis.particles() == m || coef.size() != static_cast<Eigen::Index>(m))
    throw std::invalid_argument("create: full state or wrong size");
  FockState out{SectorBasis(m, s.basis.particles() + 1), {}};
  out.amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(out.basis.size()));
  const long dim = static_cast<long>(out.basis.size());
#pragma omp parallel for if (dim > 4096)
  for (long i = 0; i < dim; ++i) {
    const u64 y = out.basis.state(i);
    cplx acc = 0.0;
    for (unsigned j = 0; j < m; ++j) {
      if (!(y >> j & 1) || coef(j) == 0.0) continue;
      const u64 x = y ^ (u64{1} << j);
      acc += coef(j) * parity_sign(x & below(j)) * s.amp(s.basis.index(x));
    }
    out.amp(i) = acc;
  }
  return out;
}

cplx inner(const FockState& a, const FockState& b) {
  if (a.basis.num_modes() != b.basis.num_modes() ||
      a.basis.particles() != b.basis.particles())
    throw std::invalid_argument("inner: states live in different sectors");
  return a.amp.dot(b.amp);
}

Eigen::MatrixXcd one_body_correlation(const FockState& s,
                                      const std::vector<unsigned>& modes) {
  const unsigned m = s.basis.num_modes();
  const auto n = static_cast<Eigen::Index>(modes.size());
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  if (s.basis.particles() == 0) return c;
  std::vector<FockState> low;
  low.reserve(modes.size());
  for (unsigned q : modes) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(m);
    e(q) = 1.0;
    low.push_back(annihilate(s, e));
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) c(i, j) = inner(low[i], low[j]);
  return c;
}

Eigen::VectorXcd momentum_mode(unsigned n_sites, unsigned m,
                               const std::vector<unsigned>& map,
                               unsigned num_modes) {
  Eigen::VectorXcd coef = Eigen::VectorXcd::Zero(num_modes);
  const double k = 2.0 * kPi * m / n_sites;
  for (unsigned j = 0; j < n_sites; ++j)
    coef(map[j]) = std::polar(1.0 / std::sqrt(double(n_sites)), -k * j);
  return coef;
}

namespace {

FockState slater(unsigned n, const std::vector<unsigned>& filled) {
  FockState s = FockState::vacuum(n);
  const auto id = identity_layout(n);
  for (unsigned m : filled) s = create(s, momentum_mode(n, m, id, n).conjugate());
  return s;
}

void fix_phase(Eigen::VectorXcd& v) {
  Eigen::Index best = 0;
  v.cwiseAbs().maxCoeff(&best);
  v *= std::abs(v(best)) / v(best);
}

}  // namespace

SystemGroundState initial_system_state(const ProtocolConfig& cfg) {
  cfg.validate();
  const unsigned n = cfg.N;
  if (cfg.initial == InitialState::Occupations) {
    std::vector<unsigned> filled;
    double energy = 0.0;
    for (unsigned m = 0; m < n; ++m) {
      if (cfg.rho[m] != 0.0 && cfg.rho[m] != 1.0)
        throw ConfigError("rho: a pure initial state needs occupations 0 or 1");
      if (cfg.rho[m] == 1.0) {
        filled.push_back(m);
        energy += 2.0 * cfg.nu * std::cos(2.0 * kPi * m / n);
      }
    }
    if (cfg.V != 0.0)
      throw ConfigError("rho: momentum occupations need V = 0");
    return {slater(n, filled), energy, 0.0};
  }
  if (cfg.V == 0.0 && cfg.particles < 0) {
    auto filled = negative_energy_momenta(n, cfg.nu);
    double energy = 0.0, gap = std::numeric_limits<double>::infinity();
    for (unsigned m = 0; m < n; ++m) {
      const double e = 2.0 * cfg.nu * std::cos(2.0 * kPi * m / n);
      gap = std::min(gap, std::abs(e));
    }
    for (unsigned m : filled) energy += 2.0 * cfg.nu * std::cos(2.0 * kPi * m / n);
    return {slater(n, filled), energy, gap};
  }
  if (n > 14)
    throw ConfigError("N: exact diagonalization supports at most 14 sites");
  FermionHamiltonian h = ring_hamiltonian(n, cfg.nu, cfg.V);
  const unsigned lo = cfg.particles < 0 ? 0 : cfg.particles;
  const unsigned hi = cfg.particles < 0 ? n : cfg.particles;
  std::optional<SystemGroundState> best;
  for (unsigned p = lo; p <= hi; ++p) {
    SectorBasis basis(n, p);
    SectorSpectrum sp = diagonalize(h, basis);
    const double e0 = sp.energies(0);
    // prefer the lower particle number on ties
    if (best && e0 >= best->energy - 1e-9) continue;
    Eigen::VectorXcd v = sp.vectors.col(0);
    fix_phase(v);
    const double gap = sp.energies.size() > 1
                           ? sp.energies(1) - e0
                           : std::numeric_limits<double>::infinity();
    best = SystemGroundState{FockState{basis, v}, e0, gap};
  }
  return *best;
}

Eigen::VectorXd momentum_occupations(const FockState& s) {
  const unsigned n = s.basis.num_modes();
  Eigen::VectorXd rho = Eigen::VectorXd::Zero(n);
  if (s.basis.particles() == 0) return rho;
  const auto id = identity_layout(n);
  for (unsigned m = 0; m < n; ++m)
    rho(m) = annihilate(s, momentum_mode(n, m, id, n)).amp.squaredNorm();
  return rho;
}

FockState couple_to_environment(const FockState& system, EnvironmentFill fill) {
  const unsigned n = system.basis.num_modes();
  FockState s{SectorBasis(2 * n, system.basis.particles()), {}};
  s.amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(s.basis.size()));
  for (std::size_t i = 0; i < system.basis.size(); ++i) {
    const u64 x = system.basis.state(i);
    u64 y = 0;
    for (unsigned j = 0; j < n; ++j)
      if (x >> j & 1) y |= u64{1} << (2 * j);
    s.amp(static_cast<Eigen::Index>(s.basis.index(y))) = system.amp(i);
  }
  if (fill == EnvironmentFill::Full)
    for (unsigned j = 0; j < n; ++j) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(2 * n);
      e(2 * j + 1) = 1.0;
      s = create(s, e);
    }
  return s;
}

SpectralGrid nk_many_body(const ProtocolConfig& cfg,
                          const std::vector<double>& omegas) {
  cfg.validate();
  const unsigned n = cfg.N;
  const FockState start =
      couple_to_environment(initial_system_state(cfg).state, cfg.fill);
  std::vector<unsigned> env(n);
  for (unsigned j = 0; j < n; ++j) env[j] = 2 * j + 1;
  SpectralGrid g = make_grid(
      cfg, omegas, cfg.trotter_steps == 0 ? "many-body-exact" : "many-body-trotter");
  const long count = static_cast<long>(omegas.size());
#pragma omp parallel for schedule(dynamic)
  for (long w = 0; w < count; ++w) {
    ProtocolConfig c = cfg;
    c.omega = omegas[w];
    FockState s = start;
    if (cfg.trotter_steps == 0) {
      SparseMatrixC h = sector_matrix(protocol_hamiltonian(c, true), s.basis);
      s.amp = chebyshev_evolve(h, s.amp, cfg.t);
    } else {
      const auto terms = trotter_step_terms(c, cfg.t / cfg.trotter_steps, true);
      for (unsigned step = 0; step < cfg.trotter_steps; ++step)
        apply_terms(s, terms);
    }
    Eigen::VectorXd nk = momentum_density(one_body_correlation(s, env));
    for (unsigned m = 0; m < n; ++m)
      g.values(m, w) = cfg.fill == EnvironmentFill::Empty ? nk(m) : 1.0 - nk(m);
  }
  return g;
}

ProtocolCircuit protocol_circuit(const ProtocolConfig& cfg, double omega) {
  cfg.validate();
  const unsigned n = cfg.N, m = 2 * n;
  if (m > kMaxStateQubits)
    throw ConfigError("N: the circuit protocol needs 2N <= " +
                      std::to_string(kMaxStateQubits) + " qubits");
  if (cfg.trotter_steps == 0)
    throw ConfigError("trotter_steps: the circuit protocol needs at least 1");
  ProtocolConfig c = cfg;
  c.omega = omega;
  ProtocolCircuit out;
  LayoutBuilder b(m);
  std::vector<unsigned> sys(n);
  for (unsigned j = 0; j < n; ++j) sys[j] = 2 * j;

  // 1. initial system state
  const auto radix = compilable_radix(n);
  bool prep = cfg.V == 0.0 && cfg.particles < 0 && radix.has_value();
  std::vector<unsigned> filled;
  if (prep && cfg.initial == InitialState::GroundState) {
    filled = negative_energy_momenta(n, cfg.nu);
  } else if (prep) {
    for (unsigned k = 0; k < n; ++k) {
      if (cfg.rho[k] == 1.0)
        filled.push_back(k);
      else if (cfg.rho[k] != 0.0)
        throw ConfigError("rho: a pure initial state needs occupations 0 or 1");
    }
  }
  if (prep) {
    b.append(ground_state_prep_circuit(
                 n, filled, usable_strategy(cfg.interleave, n, *radix)),
             sys);
  } else {
    FockState s =
        couple_to_environment(initial_system_state(cfg).state, EnvironmentFill::Empty);
    out.loaded_state = s.basis.embed(s.amp);
  }

  // 2. filled environment
  if (cfg.fill == EnvironmentFill::Full) {
    for (unsigned j = 0; j < n; ++j) b.add(Gate::x(2 * j + 1));
    for (unsigned i = 0; i < n; ++i)
      if ((n - i) % 2 == 1) b.add(Gate::z(2 * i));
  }

  // 3. product formula
  const Circuit step = trotter_terms_circuit(
      trotter_step_terms(c, cfg.t / cfg.trotter_steps, true), m);
  for (unsigned s = 0; s < cfg.trotter_steps; ++s) b.append(step);

  // 4. readout
  if (radix) {
    b.append(interleave_circuit(interleave_permutation(m, 2),
                                usable_strategy(cfg.interleave, m, 2)));
    std::vector<unsigned> env(n);
    for (unsigned j = 0; j < n; ++j) env[j] = n + j;
    FFTPlan plan{n, *radix, usable_strategy(cfg.interleave, n, *radix)};
    b.append(compile_fft(plan), env);
    out.fourier_readout = true;
    out.momentum_qubits.resize(n);
    for (unsigned k = 0; k < n; ++k) out.momentum_qubits[k] = b.layout()[n + k];
  } else {
    if (b.layout() != identity_layout(m))
      throw std::logic_error("correlation readout needs the trivial layout");
    out.environment_qubits.resize(n);
    for (unsigned j = 0; j < n; ++j) out.environment_qubits[j] = 2 * j + 1;
  }
  out.circuit = std::move(b.circuit());
  return out;
}

SpectralGrid run_circuit_protocol(const ProtocolConfig& cfg,
                                  const std::vector<double>& omegas) {
  cfg.validate();
  const unsigned n = cfg.N;
  SpectralGrid g = make_grid(cfg, omegas, "circuit");
  for (std::size_t w = 0; w < omegas.size(); ++w) {
    ProtocolCircuit pc = protocol_circuit(cfg, omegas[w]);
    if (w == 0) {
      g.notes["two_qubit_count"] = std::to_string(two_qubit_count(pc.circuit));
      g.notes["two_qubit_depth"] = std::to_string(two_qubit_depth(pc.circuit));
      g.notes["readout"] = pc.fourier_readout ? "fourier" : "correlation";
    }
    StateVector psi = pc.loaded_state ? *pc.loaded_state : StateVector(2 * n);
    psi.apply(pc.circuit);
    Eigen::VectorXd nk(n);
    if (pc.fourier_readout) {
      if (cfg.shots > 0) {
        std::mt19937_64 rng(cfg.seed + w);
        auto occ = sampled_occupations(psi, cfg.shots, rng);
        for (unsigned k = 0; k < n; ++k) nk(k) = occ[pc.momentum_qubits[k]];
      } else {
        for (unsigned k = 0; k < n; ++k)
          nk(k) = 0.5 * (1.0 - z_expectation(psi, pc.momentum_qubits[k]));
      }
    } else {
      if (cfg.shots > 0)
        throw ConfigError("shots: sampling needs the Fourier readout "
                          "(N a power of 2 or 3)");
      nk = momentum_density(one_body_correlation(psi, pc.environment_qubits));
    }
    for (unsigned k = 0; k < n; ++k)
      g.values(k, w) = cfg.fill == EnvironmentFill::Empty ? nk(k) : 1.0 - nk(k);
  }
  return g;
}

}  // namespace fermispec
