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

#include "fermispec/mode_transform.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "fermispec/statevector.hpp"

namespace fermispec {

namespace {

const cplx I{0.0, 1.0};

Eigen::MatrixXcd positions_to_transform(const Eigen::MatrixXcd& amp,
                                        cplx vacuum,
                                        const std::vector<unsigned>& in,
                                        const std::vector<unsigned>& out) {
  const unsigned n = static_cast<unsigned>(in.size());
  Eigen::MatrixXcd t(n, n);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned m = 0; m < n; ++m)
      t(j, m) = std::conj(amp(out[m], in[j]) / vacuum);
  return t;
}

}  // namespace

double ModeTransform::unitarity_error() const {
  Eigen::MatrixXcd e = matrix.adjoint() * matrix -
                       Eigen::MatrixXcd::Identity(matrix.rows(), matrix.cols());
  return e.cwiseAbs().maxCoeff();
}

ModeTransform extract_mode_transform(const Circuit& c) {
  const unsigned n = c.num_qubits();
  // amp(p, q): amplitude on single excitation p after starting from q
  Eigen::MatrixXcd amp = Eigen::MatrixXcd::Identity(n, n);
  cplx vac = 1.0;
  for (const Gate& g : c.gates()) {
    const unsigned a = g.qubits[0], b = g.qubits[1];
    switch (g.kind) {
      case GateKind::Barrier:
      case GateKind::CZ:
        break;
      case GateKind::Z:
        amp.row(a) *= -1.0;
        break;
      case GateKind::S:
        amp.row(a) *= I;
        break;
      case GateKind::Sdg:
        amp.row(a) *= -I;
        break;
      case GateKind::Rz: {
        cplx lo = std::polar(1.0, -g.angle / 2);
        amp *= lo;
        amp.row(a) *= std::polar(1.0, g.angle);
        vac *= lo;
        break;
      }
      case GateKind::SWAP:
      case GateKind::FSWAP:
        amp.row(a).swap(amp.row(b));
        break;
      case GateKind::Givens: {
        const double co = std::cos(g.angle), si = std::sin(g.angle);
        Eigen::RowVectorXcd ra = amp.row(a), rb = amp.row(b);
        amp.row(a) = co * ra + I * si * rb;
        amp.row(b) = I * si * ra + co * rb;
        break;
      }
      case GateKind::X:
      case GateKind::CX:
      case GateKind::CY:
        throw CircuitError("gate " + g.str() +
                           " does not conserve particle number");
    }
  }
  return {positions_to_transform(amp, vac, c.input_layout(),
                                 c.output_layout())};
}

namespace {

using SparseState = std::unordered_map<std::uint64_t, cplx>;

void sparse_apply(SparseState& st, const Gate& g) {
  const std::uint64_t ma = std::uint64_t{1} << g.qubits[0];
  const std::uint64_t mb = std::uint64_t{1} << g.qubits[1];
  if (g.kind == GateKind::Barrier) return;
  SparseState next;
  next.reserve(st.size() * 2);
  for (const auto& [x, v] : st) {
    const bool a = x & ma, b = x & mb;
    switch (g.kind) {
      case GateKind::X: next[x ^ ma] += v; break;
      case GateKind::Z: next[x] += a ? -v : v; break;
      case GateKind::S: next[x] += a ? I * v : v; break;
      case GateKind::Sdg: next[x] += a ? -I * v : v; break;
      case GateKind::Rz:
        next[x] += std::polar(1.0, a ? g.angle / 2 : -g.angle / 2) * v;
        break;
      case GateKind::CZ: next[x] += (a && b) ? -v : v; break;
      case GateKind::CX: next[a ? x ^ mb : x] += v; break;
      case GateKind::CY:
        // controlled iY: |c=1,0> -> -|c=1,1>, |c=1,1> -> |c=1,0>
        if (a)
          next[x ^ mb] += b ? v : -v;
        else
          next[x] += v;
        break;
      case GateKind::SWAP:
      case GateKind::FSWAP: {
        std::uint64_t y = x;
        if (a != b) y ^= ma | mb;
        cplx w = (g.kind == GateKind::FSWAP && a && b) ? -v : v;
        next[y] += w;
        break;
      }
      case GateKind::Givens: {
        if (a == b) {
          next[x] += v;
        } else {
          next[x] += std::cos(g.angle) * v;
          next[x ^ ma ^ mb] += I * std::sin(g.angle) * v;
        }
        break;
      }
      case GateKind::Barrier:
        break;
    }
  }
  for (auto it = next.begin(); it != next.end();)
    it = std::abs(it->second) == 0.0 ? next.erase(it) : std::next(it);
  st.swap(next);
}

}  // namespace

ModeTransform sparse_mode_transform(const Circuit& c) {
  const unsigned n = c.num_qubits();
  if (n > 64) throw CircuitError("sparse_mode_transform: at most 64 qubits");
  Eigen::MatrixXcd amp = Eigen::MatrixXcd::Zero(n, n);
  cplx vac = 0.0;
  for (unsigned q = 0; q <= n; ++q) {
    SparseState st;
    st[q == n ? 0 : std::uint64_t{1} << q] = 1.0;
    for (const Gate& g : c.gates()) sparse_apply(st, g);
    for (const auto& [x, v] : st) {
      const int w = std::popcount(x);
      if (w != (q == n ? 0 : 1)) {
        if (std::abs(v) > 1e-9)
          throw CircuitError("circuit does not conserve particle number");
        continue;
      }
      if (q == n)
        vac = v;
      else
        amp(std::countr_zero(x), q) = v;
    }
  }
  return {positions_to_transform(amp, vac, c.input_layout(),
                                 c.output_layout())};
}

ModeTransform mode_transform_from_statevector(const Circuit& c) {
  const unsigned n = c.num_qubits();
  StateVector vac(n);
  vac.apply(c);
  Eigen::MatrixXcd amp(n, n);
  for (unsigned q = 0; q < n; ++q) {
    StateVector s = StateVector::basis_state(n, std::uint64_t{1} << q);
    s.apply(c);
    for (unsigned p = 0; p < n; ++p) amp(p, q) = s[std::uint64_t{1} << p];
  }
  return {positions_to_transform(amp, vac[0], c.input_layout(),
                                 c.output_layout())};
}

double two_particle_consistency_error(const Circuit& c) {
  const unsigned n = c.num_qubits();
  const auto& in = c.input_layout();
  const auto& out = c.output_layout();
  ModeTransform t = sparse_mode_transform(c);
  StateVector vac(n);
  vac.apply(c);
  const cplx phi0 = vac[0];
  // b(m, j) = <m|U|j> / phi0 in position labels
  Eigen::MatrixXcd b = t.matrix.conjugate().transpose();
  double worst = 0.0;
  for (unsigned a1 = 0; a1 < n; ++a1)
    for (unsigned a2 = a1 + 1; a2 < n; ++a2) {
      // c_a1^dag c_a2^dag |0> is the plain basis state for a1 < a2
      std::uint64_t idx = (std::uint64_t{1} << in[a1]) |
                          (std::uint64_t{1} << in[a2]);
      StateVector s = StateVector::basis_state(n, idx);
      s.apply(c);
      for (unsigned m1 = 0; m1 < n; ++m1)
        for (unsigned m2 = m1 + 1; m2 < n; ++m2) {
          cplx want = phi0 * (b(m1, a1) * b(m2, a2) - b(m2, a1) * b(m1, a2));
          std::uint64_t o = (std::uint64_t{1} << out[m1]) |
                            (std::uint64_t{1} << out[m2]);
          worst = std::max(worst, std::abs(s[o] - want));
        }
    }
  return worst;
}

Eigen::MatrixXcd dft_matrix(unsigned n) {
  Eigen::MatrixXcd d(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (unsigned j = 0; j < n; ++j)
    for (unsigned l = 0; l < n; ++l) {
      // reduce the exponent first so large N keeps full precision
      unsigned e = (j * l) % n;
      d(j, l) = std::polar(scale, 2.0 * std::numbers::pi * e / n);
    }
  return d;
}

double max_error_up_to_phase(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b) {
  return phase_distance(a, b);
}

GaussianState GaussianState::vacuum(unsigned n) {
  return {Eigen::MatrixXcd::Zero(n, n)};
}

GaussianState GaussianState::from_orbitals(const Eigen::MatrixXcd& orbitals) {
  return {orbitals.conjugate() * orbitals.transpose()};
}

GaussianState GaussianState::from_occupations(const std::vector<double>& occ) {
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(
      occ.data(), static_cast<Eigen::Index>(occ.size()));
  return {v.cast<cplx>().asDiagonal()};
}

Eigen::VectorXd GaussianState::occupations() const {
  return corr.diagonal().real();
}

bool GaussianState::is_valid(double tol) const {
  if ((corr - corr.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(corr);
  return es.eigenvalues().minCoeff() > -tol &&
         es.eigenvalues().maxCoeff() < 1.0 + tol;
}

GaussianState evolve_gaussian(const GaussianState& state,
                              const ModeTransform& t) {
  if (state.size() != t.size())
    throw std::invalid_argument("evolve_gaussian: dimension mismatch (" +
                                std::to_string(state.size()) + " vs " +
                                std::to_string(t.size()) + ")");
  return {t.matrix.transpose() * state.corr * t.matrix.conjugate()};
}

Eigen::MatrixXd hamiltonian_mode_matrix(unsigned n_sites, double nu,
                                        double epsilon, double omega) {
  if (n_sites < 2)
    throw std::invalid_argument("hamiltonian_mode_matrix: need N >= 2");
  const unsigned n = n_sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (unsigned j = 0; j < n; ++j) {
    unsigned k = (j + 1) % n;
    h(2 * j, 2 * k) += nu;
    h(2 * k, 2 * j) += nu;
    h(2 * j, 2 * j + 1) = h(2 * j + 1, 2 * j) = epsilon / 2;
    h(2 * j + 1, 2 * j + 1) = omega;
  }
  return h;
}

QuadraticEvolution::QuadraticEvolution(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  evals_ = es.eigenvalues();
  evecs_ = es.eigenvectors();
}

ModeTransform QuadraticEvolution::transform(double t) const {
  Eigen::VectorXcd ph(evals_.size());
  for (Eigen::Index i = 0; i < evals_.size(); ++i)
    ph(i) = std::polar(1.0, evals_(i) * t);
  Eigen::MatrixXcd v = evecs_.cast<cplx>();
  return {v * ph.asDiagonal() * v.transpose()};
}

}  // namespace fermispec
