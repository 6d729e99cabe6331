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

#include "fermispec/tableau.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <optional>

#include "fermispec/statevector.hpp"

namespace fermispec {

namespace {

using u64 = std::uint64_t;

struct LocalPauli {
  unsigned x = 0, z = 0, r = 0;
};

Eigen::MatrixXcd single_pauli(bool x, bool z) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  if (z) m(1, 1) = -1.0;
  if (x) {
    Eigen::MatrixXcd xm = Eigen::MatrixXcd::Zero(2, 2);
    xm(0, 1) = xm(1, 0) = 1.0;
    m = xm * m;
  }
  return m;
}

Eigen::MatrixXcd local_matrix(unsigned k, const LocalPauli& p) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  // local index is b0 + 2 b1, so qubit 1 is the left Kronecker factor
  for (unsigned q = 0; q < k; ++q) {
    Eigen::MatrixXcd s = single_pauli(p.x >> q & 1, p.z >> q & 1);
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) =
            s(i, j) * m;
    m = next;
  }
  const cplx ph[4] = {1.0, {0.0, 1.0}, -1.0, {0.0, -1.0}};
  return ph[p.r % 4] * m;
}

std::optional<LocalPauli> decompose(unsigned k, const Eigen::MatrixXcd& m) {
  const unsigned d = 1u << k;
  for (unsigned x = 0; x < d; ++x)
    for (unsigned z = 0; z < d; ++z) {
      LocalPauli p{x, z, 0};
      cplx c = (local_matrix(k, p).adjoint() * m).trace() / double(d);
      if (std::abs(std::abs(c) - 1.0) > 1e-9) continue;
      for (unsigned r = 0; r < 4; ++r) {
        p.r = r;
        if ((local_matrix(k, p) - m).cwiseAbs().maxCoeff() < 1e-9) return p;
      }
    }
  return std::nullopt;
}

// Images of X_q and Z_q for each local qubit q, in the order
// X_0, Z_0, X_1, Z_1.
std::optional<std::vector<LocalPauli>> compute_images(const Gate& g) {
  const unsigned k = g.arity();
  Eigen::MatrixXcd u = gate_matrix(g);
  std::vector<LocalPauli> out;
  for (unsigned q = 0; q < k; ++q)
    for (int which = 0; which < 2; ++which) {
      LocalPauli p;
      if (which == 0)
        p.x = 1u << q;
      else
        p.z = 1u << q;
      auto img = decompose(k, u * local_matrix(k, p) * u.adjoint());
      if (!img) return std::nullopt;
      out.push_back(*img);
    }
  return out;
}

std::optional<std::vector<LocalPauli>> gate_images(const Gate& g) {
  if (kind_has_angle(g.kind)) return compute_images(g);
  thread_local std::map<GateKind, std::optional<std::vector<LocalPauli>>> cache;
  auto it = cache.find(g.kind);
  if (it == cache.end()) it = cache.emplace(g.kind, compute_images(g)).first;
  return it->second;
}

PauliString embed(unsigned n, const Gate& g, const LocalPauli& p) {
  PauliString s(n);
  for (unsigned q = 0; q < g.arity(); ++q) {
    s.set_x(g.qubits[q], p.x >> q & 1);
    s.set_z(g.qubits[q], p.z >> q & 1);
  }
  s.r = p.r;
  return s;
}

}  // namespace

PauliString::PauliString(unsigned num_qubits)
    : n(num_qubits), x((num_qubits + 63) / 64, 0), z((num_qubits + 63) / 64, 0) {}

void PauliString::set_x(unsigned q, bool v) {
  u64 m = u64{1} << (q % 64);
  x[q / 64] = v ? (x[q / 64] | m) : (x[q / 64] & ~m);
}

void PauliString::set_z(unsigned q, bool v) {
  u64 m = u64{1} << (q % 64);
  z[q / 64] = v ? (z[q / 64] | m) : (z[q / 64] & ~m);
}

void PauliString::mul_right(const PauliString& o) {
  unsigned cross = 0;
  for (std::size_t w = 0; w < x.size(); ++w) {
    cross += std::popcount(z[w] & o.x[w]);
    x[w] ^= o.x[w];
    z[w] ^= o.z[w];
  }
  r = (r + o.r + 2 * cross) % 4;
}

std::string PauliString::str() const {
  static const char* ph[4] = {"+", "+i", "-", "-i"};
  std::string s = ph[r];
  for (unsigned q = 0; q < n; ++q) {
    bool xb = get_x(q), zb = get_z(q);
    s += xb ? (zb ? 'W' : 'X') : (zb ? 'Z' : 'I');  // W = XZ = -iY
  }
  return s;
}

bool operator==(const PauliString& a, const PauliString& b) {
  return a.n == b.n && a.r == b.r && a.x == b.x && a.z == b.z;
}

StabilizerTableau::StabilizerTableau(unsigned num_qubits) : n_(num_qubits) {
  rows_.assign(2 * n_, PauliString(n_));
  for (unsigned q = 0; q < n_; ++q) {
    rows_[q].set_x(q, true);
    rows_[n_ + q].set_z(q, true);
  }
}

void StabilizerTableau::apply(const Gate& g) {
  if (g.kind == GateKind::Barrier) return;
  for (unsigned i = 0; i < g.arity(); ++i)
    if (g.qubits[i] >= n_)
      throw CircuitError("gate " + g.str() + " out of range for tableau");
  auto images = gate_images(g);
  if (!images)
    throw CircuitError("gate " + g.str() + " is not Clifford");
  std::vector<PauliString> emb;
  for (const LocalPauli& p : *images) emb.push_back(embed(n_, g, p));
  for (PauliString& row : rows_) {
    PauliString next = row;
    for (unsigned q = 0; q < g.arity(); ++q) {
      next.set_x(g.qubits[q], false);
      next.set_z(g.qubits[q], false);
    }
    // X^x Z^z factorizes qubit by qubit without extra phase
    for (unsigned q = 0; q < g.arity(); ++q) {
      if (row.get_x(g.qubits[q])) next.mul_right(emb[2 * q]);
      if (row.get_z(g.qubits[q])) next.mul_right(emb[2 * q + 1]);
    }
    row = std::move(next);
  }
}

void StabilizerTableau::apply(const Circuit& c) {
  if (c.num_qubits() > n_)
    throw CircuitError("circuit register larger than tableau");
  for (const Gate& g : c.gates()) apply(g);
}

bool StabilizerTableau::is_symplectic() const {
  auto anticommute = [](const PauliString& a, const PauliString& b) {
    unsigned s = 0;
    for (std::size_t w = 0; w < a.x.size(); ++w)
      s += std::popcount(a.x[w] & b.z[w]) + std::popcount(a.z[w] & b.x[w]);
    return (s & 1) != 0;
  };
  for (unsigned i = 0; i < 2 * n_; ++i)
    for (unsigned j = i + 1; j < 2 * n_; ++j) {
      bool expect = (j == i + n_);
      if (anticommute(rows_[i], rows_[j]) != expect) return false;
    }
  return true;
}

bool is_clifford_gate(const Gate& g) {
  if (g.kind == GateKind::Barrier) return true;
  return gate_images(g).has_value();
}

StabilizerTableau tableau_of(const Circuit& c) {
  StabilizerTableau t(c.num_qubits());
  t.apply(c);
  return t;
}

}  // namespace fermispec
