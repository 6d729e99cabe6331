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

#include "fermispec/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace fermispec {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

constexpr unsigned kParallelMinQubits = 12;

const cplx I{0.0, 1.0};

inline u64 insert_zero(u64 k, unsigned bit) {
  u64 low = k & ((u64{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

void check_qubits(const StateVector& psi, const Gate& g) {
  for (unsigned i = 0; i < g.arity(); ++i)
    if (g.qubits[i] >= psi.num_qubits())
      throw CircuitError("gate " + g.str() + " out of range for " +
                         std::to_string(psi.num_qubits()) + "-qubit state");
  if (g.is_two_qubit() && g.qubits[0] == g.qubits[1])
    throw CircuitError("gate " + g.str() + " repeats a qubit");
}

template <class F>
void for_each_pair(StateVector& psi, unsigned q, F&& f) {
  cplx* a = psi.amplitudes().data();
  const i64 count = static_cast<i64>(psi.dim() >> 1);
  const u64 m = u64{1} << q;
#pragma omp parallel for schedule(static) \
    if (psi.num_qubits() >= kParallelMinQubits)
  for (i64 k = 0; k < count; ++k) {
    u64 i0 = insert_zero(static_cast<u64>(k), q);
    f(a[i0], a[i0 | m]);
  }
}

// f receives amplitudes ordered by local index b0 + 2 b1 with b0 the bit of
// qubit qa.
template <class F>
void for_each_quad(StateVector& psi, unsigned qa, unsigned qb, F&& f) {
  cplx* a = psi.amplitudes().data();
  const i64 count = static_cast<i64>(psi.dim() >> 2);
  const unsigned lo = std::min(qa, qb), hi = std::max(qa, qb);
  const u64 ma = u64{1} << qa, mb = u64{1} << qb;
#pragma omp parallel for schedule(static) \
    if (psi.num_qubits() >= kParallelMinQubits)
  for (i64 k = 0; k < count; ++k) {
    u64 i0 = insert_zero(insert_zero(static_cast<u64>(k), lo), hi);
    f(a[i0], a[i0 | ma], a[i0 | mb], a[i0 | ma | mb]);
  }
}

}  // namespace

StateVector::StateVector(unsigned num_qubits) : n_(num_qubits) {
  if (n_ > kMaxStateQubits)
    throw CircuitError("statevector limited to " +
                       std::to_string(kMaxStateQubits) + " qubits, asked for " +
                       std::to_string(n_));
  amp_.assign(dim(), cplx{0.0, 0.0});
  amp_[0] = 1.0;
}

StateVector::StateVector(unsigned num_qubits, std::vector<cplx> amplitudes)
    : StateVector(num_qubits) {
  if (amplitudes.size() != dim())
    throw CircuitError("amplitude vector has wrong length");
  amp_ = std::move(amplitudes);
}

StateVector StateVector::basis_state(unsigned num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.dim()) throw CircuitError("basis index out of range");
  s.amp_[0] = 0.0;
  s.amp_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& z : amp_) s += std::norm(z);
  return std::sqrt(s);
}

void StateVector::normalize() {
  double nrm = norm();
  if (nrm == 0.0) throw CircuitError("cannot normalize the zero vector");
  for (cplx& z : amp_) z /= nrm;
}

StateVector& StateVector::apply(const Gate& g) {
  apply_gate_inplace(*this, g);
  return *this;
}

StateVector& StateVector::apply(const Circuit& c) {
  if (c.num_qubits() > n_)
    throw CircuitError("circuit register larger than state");
  for (const Gate& g : c.gates()) apply_gate_inplace(*this, g);
  return *this;
}

void apply_gate_inplace(StateVector& psi, const Gate& g) {
  check_qubits(psi, g);
  const unsigned a = g.qubits[0], b = g.qubits[1];
  switch (g.kind) {
    case GateKind::Barrier:
      return;
    case GateKind::X:
      for_each_pair(psi, a, [](cplx& x0, cplx& x1) { std::swap(x0, x1); });
      return;
    case GateKind::Z:
      for_each_pair(psi, a, [](cplx&, cplx& x1) { x1 = -x1; });
      return;
    case GateKind::S:
      for_each_pair(psi, a, [](cplx&, cplx& x1) { x1 *= I; });
      return;
    case GateKind::Sdg:
      for_each_pair(psi, a, [](cplx&, cplx& x1) { x1 *= -I; });
      return;
    case GateKind::Rz: {
      const cplx d0 = std::polar(1.0, -g.angle / 2), d1 = std::polar(1.0, g.angle / 2);
      for_each_pair(psi, a, [d0, d1](cplx& x0, cplx& x1) {
        x0 *= d0;
        x1 *= d1;
      });
      return;
    }
    case GateKind::CZ:
      for_each_quad(psi, a, b, [](cplx&, cplx&, cplx&, cplx& x3) { x3 = -x3; });
      return;
    case GateKind::CX:
      // control a is bit 0 of the local index
      for_each_quad(psi, a, b,
                    [](cplx&, cplx& x1, cplx&, cplx& x3) { std::swap(x1, x3); });
      return;
    case GateKind::CY:
      for_each_quad(psi, a, b, [](cplx&, cplx& x1, cplx&, cplx& x3) {
        cplx t = x1;
        x1 = x3;
        x3 = -t;
      });
      return;
    case GateKind::SWAP:
      for_each_quad(psi, a, b,
                    [](cplx&, cplx& x1, cplx& x2, cplx&) { std::swap(x1, x2); });
      return;
    case GateKind::FSWAP:
      for_each_quad(psi, a, b, [](cplx&, cplx& x1, cplx& x2, cplx& x3) {
        std::swap(x1, x2);
        x3 = -x3;
      });
      return;
    case GateKind::Givens: {
      const double c = std::cos(g.angle), s = std::sin(g.angle);
      const cplx is = I * s;
      for_each_quad(psi, a, b, [c, is](cplx&, cplx& x1, cplx& x2, cplx&) {
        cplx y1 = c * x1 + is * x2;
        cplx y2 = is * x1 + c * x2;
        x1 = y1;
        x2 = y2;
      });
      return;
    }
  }
}

StateVector apply_gate(StateVector psi, const Gate& g) {
  apply_gate_inplace(psi, g);
  return psi;
}

Eigen::MatrixXcd gate_matrix(const Gate& g) {
  using M = Eigen::MatrixXcd;
  switch (g.kind) {
    case GateKind::Barrier:
      return M::Identity(1, 1);
    case GateKind::X: {
      M m = M::Zero(2, 2);
      m(0, 1) = m(1, 0) = 1.0;
      return m;
    }
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Rz: {
      M m = M::Zero(2, 2);
      if (g.kind == GateKind::Rz) {
        m(0, 0) = std::polar(1.0, -g.angle / 2);
        m(1, 1) = std::polar(1.0, g.angle / 2);
      } else {
        m(0, 0) = 1.0;
        m(1, 1) = g.kind == GateKind::Z ? cplx(-1.0) :
                  g.kind == GateKind::S ? I : -I;
      }
      return m;
    }
    default:
      break;
  }
  // two-qubit kinds, index b0 + 2 b1
  M m = M::Identity(4, 4);
  switch (g.kind) {
    case GateKind::CZ:
      m(3, 3) = -1.0;
      break;
    case GateKind::CX:
      m(1, 1) = m(3, 3) = 0.0;
      m(1, 3) = m(3, 1) = 1.0;
      break;
    case GateKind::CY: {
      // CZ * CX as operators
      M cz = M::Identity(4, 4), cx = M::Identity(4, 4);
      cz(3, 3) = -1.0;
      cx(1, 1) = cx(3, 3) = 0.0;
      cx(1, 3) = cx(3, 1) = 1.0;
      m = cz * cx;
      break;
    }
    case GateKind::SWAP:
      m(1, 1) = m(2, 2) = 0.0;
      m(1, 2) = m(2, 1) = 1.0;
      break;
    case GateKind::FSWAP:
      m(1, 1) = m(2, 2) = 0.0;
      m(1, 2) = m(2, 1) = 1.0;
      m(3, 3) = -1.0;
      break;
    case GateKind::Givens: {
      // exp(i theta (XX + YY) / 2) from the Hermitian generator
      M xx = M::Zero(4, 4), yy = M::Zero(4, 4);
      xx(0, 3) = xx(3, 0) = xx(1, 2) = xx(2, 1) = 1.0;
      yy(0, 3) = yy(3, 0) = -1.0;
      yy(1, 2) = yy(2, 1) = 1.0;
      Eigen::SelfAdjointEigenSolver<M> es((xx + yy) / 2.0);
      Eigen::VectorXcd ph = (I * g.angle * es.eigenvalues().cast<cplx>())
                                .array()
                                .exp()
                                .matrix();
      m = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
      break;
    }
    default:
      break;
  }
  return m;
}

namespace reference {

void apply_gate(StateVector& psi, const Gate& g) {
  check_qubits(psi, g);
  if (g.kind == GateKind::Barrier) return;
  Eigen::MatrixXcd m = gate_matrix(g);
  auto& amp = psi.amplitudes();
  if (g.arity() == 1) {
    const u64 mask = u64{1} << g.qubits[0];
    for (u64 i = 0; i < psi.dim(); ++i) {
      if (i & mask) continue;
      cplx x0 = amp[i], x1 = amp[i | mask];
      amp[i] = m(0, 0) * x0 + m(0, 1) * x1;
      amp[i | mask] = m(1, 0) * x0 + m(1, 1) * x1;
    }
    return;
  }
  const u64 ma = u64{1} << g.qubits[0], mb = u64{1} << g.qubits[1];
  for (u64 i = 0; i < psi.dim(); ++i) {
    if ((i & ma) || (i & mb)) continue;
    const u64 idx[4] = {i, i | ma, i | mb, i | ma | mb};
    cplx x[4], y[4];
    for (int r = 0; r < 4; ++r) x[r] = amp[idx[r]];
    for (int r = 0; r < 4; ++r) {
      y[r] = 0.0;
      for (int c = 0; c < 4; ++c) y[r] += m(r, c) * x[c];
    }
    for (int r = 0; r < 4; ++r) amp[idx[r]] = y[r];
  }
}

}  // namespace reference

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  if (c.num_qubits() > kMaxUnitaryQubits)
    throw CircuitError("dense unitary limited to " +
                       std::to_string(kMaxUnitaryQubits) + " qubits");
  const u64 dim = u64{1} << c.num_qubits();
  Eigen::MatrixXcd u(dim, dim);
  for (u64 col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis_state(c.num_qubits(), col);
    s.apply(c);
    for (u64 row = 0; row < dim; ++row) u(row, col) = s[row];
  }
  return u;
}

double phase_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw CircuitError("phase_distance: shape mismatch");
  // best phase aligns the overlap tr(B^dag A)
  cplx ov = (b.adjoint() * a).trace();
  cplx z = std::abs(ov) > 0 ? ov / std::abs(ov) : cplx(1.0);
  return (a - z * b).cwiseAbs().maxCoeff();
}

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw CircuitError("inner: register mismatch");
  cplx s = 0.0;
  for (u64 i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

namespace {

StateVector ladder(const StateVector& psi, unsigned q, bool creation) {
  if (q >= psi.num_qubits()) throw CircuitError("mode index out of range");
  StateVector out(psi.num_qubits());
  auto& o = out.amplitudes();
  std::fill(o.begin(), o.end(), cplx(0.0));
  const u64 m = u64{1} << q;
  const u64 below = m - 1;
  const auto& a = psi.amplitudes();
  const i64 dim = static_cast<i64>(psi.dim());
#pragma omp parallel for schedule(static) \
    if (psi.num_qubits() >= kParallelMinQubits)
  for (i64 ii = 0; ii < dim; ++ii) {
    u64 i = static_cast<u64>(ii);
    bool occ = (i & m) != 0;
    if (occ == creation) continue;
    double sign = (std::popcount(i & below) & 1) ? -1.0 : 1.0;
    o[i ^ m] = sign * a[i];
  }
  return out;
}

}  // namespace

StateVector annihilate(const StateVector& psi, unsigned q) {
  return ladder(psi, q, false);
}

StateVector create(const StateVector& psi, unsigned q) {
  return ladder(psi, q, true);
}

Eigen::MatrixXcd one_body_correlation(const StateVector& psi,
                                      const std::vector<unsigned>& modes) {
  std::vector<StateVector> lowered;
  lowered.reserve(modes.size());
  for (unsigned q : modes) lowered.push_back(annihilate(psi, q));
  const std::size_t m = modes.size();
  Eigen::MatrixXcd c(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      c(i, j) = inner(lowered[i], lowered[j]);
      c(j, i) = std::conj(c(i, j));
    }
  return c;
}

double z_expectation(const StateVector& psi, unsigned q) {
  if (q >= psi.num_qubits()) throw CircuitError("qubit index out of range");
  const u64 m = u64{1} << q;
  double s = 0.0;
  for (u64 i = 0; i < psi.dim(); ++i)
    s += (i & m ? -1.0 : 1.0) * std::norm(psi[i]);
  return s;
}

std::vector<double> sampled_occupations(const StateVector& psi,
                                        std::uint64_t shots,
                                        std::mt19937_64& rng) {
  std::vector<double> weights(psi.dim());
  for (u64 i = 0; i < psi.dim(); ++i) weights[i] = std::norm(psi[i]);
  std::discrete_distribution<u64> dist(weights.begin(), weights.end());
  std::vector<double> occ(psi.num_qubits(), 0.0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    u64 x = dist(rng);
    for (unsigned q = 0; q < psi.num_qubits(); ++q)
      if (x >> q & 1) occ[q] += 1.0;
  }
  for (double& v : occ) v /= static_cast<double>(shots);
  return occ;
}

}  // namespace fermispec
