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

#include "fermispec/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fermispec {

std::string kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::CZ: return "CZ";
    case GateKind::CX: return "CX";
    case GateKind::CY: return "CY";
    case GateKind::SWAP: return "SWAP";
    case GateKind::FSWAP: return "FSWAP";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "Sdg";
    case GateKind::Rz: return "Rz";
    case GateKind::Givens: return "Givens";
    case GateKind::Barrier: return "Barrier";
  }
  return "?";
}

unsigned kind_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CZ:
    case GateKind::CX:
    case GateKind::CY:
    case GateKind::SWAP:
    case GateKind::FSWAP:
    case GateKind::Givens:
      return 2;
    case GateKind::Barrier:
      return 0;
    default:
      return 1;
  }
}

bool kind_has_angle(GateKind kind) {
  return kind == GateKind::Rz || kind == GateKind::Givens;
}

std::vector<Gate> Gate::inverse() const {
  switch (kind) {
    case GateKind::S: return {Gate::sdg(qubits[0])};
    case GateKind::Sdg: return {Gate::s(qubits[0])};
    case GateKind::Rz: return {Gate::rz(-angle, qubits[0])};
    case GateKind::Givens:
      return {Gate::givens(-angle, qubits[0], qubits[1])};
    case GateKind::CY:
      // (CZ CX)^-1 = CX CZ = CZ CX Z_c: controlled-iY squares to Z on the
      // control.
      return {Gate::cy(qubits[0], qubits[1]), Gate::z(qubits[0])};
    default:
      return {*this};
  }
}

std::string Gate::str() const {
  std::ostringstream os;
  os.precision(17);
  os << kind_name(kind);
  if (kind == GateKind::Barrier) return os.str();
  os << "(" << qubits[0];
  if (is_two_qubit()) os << "," << qubits[1];
  if (kind_has_angle(kind)) os << "," << angle;
  os << ")";
  return os.str();
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind) return false;
  unsigned ar = a.arity();
  for (unsigned i = 0; i < ar; ++i)
    if (a.qubits[i] != b.qubits[i]) return false;
  if (kind_has_angle(a.kind) && std::abs(a.angle - b.angle) > kAngleTol)
    return false;
  return true;
}

Circuit::Circuit(unsigned num_qubits)
    : n_(num_qubits),
      in_layout_(identity_layout(num_qubits)),
      out_layout_(identity_layout(num_qubits)) {}

void Circuit::set_input_layout(std::vector<unsigned> layout) {
  if (!is_permutation(layout, n_))
    throw CircuitError("input layout is not a permutation of the register");
  in_layout_ = std::move(layout);
}

void Circuit::set_output_layout(std::vector<unsigned> layout) {
  if (!is_permutation(layout, n_))
    throw CircuitError("output layout is not a permutation of the register");
  out_layout_ = std::move(layout);
}

bool Circuit::has_trivial_layouts() const {
  auto id = identity_layout(n_);
  return in_layout_ == id && out_layout_ == id;
}

void Circuit::add(const Gate& g) {
  unsigned ar = g.arity();
  for (unsigned i = 0; i < ar; ++i) {
    if (g.qubits[i] >= n_)
      throw CircuitError("gate " + g.str() + " addresses qubit outside a " +
                         std::to_string(n_) + "-qubit register");
  }
  if (ar == 2 && g.qubits[0] == g.qubits[1])
    throw CircuitError("gate " + g.str() + " repeats a qubit");
  if (kind_has_angle(g.kind) && !std::isfinite(g.angle))
    throw CircuitError("gate " + g.str() + " has a non-finite angle");
  gates_.push_back(g);
}

void Circuit::append(const Circuit& c, const std::vector<unsigned>& map) {
  if (map.size() != c.num_qubits())
    throw CircuitError("qubit map size does not match appended circuit");
  for (const Gate& g : c.gates()) {
    Gate h = g;
    for (unsigned i = 0; i < g.arity(); ++i) h.qubits[i] = map[g.qubits[i]];
    if (g.arity() == 1) h.qubits[1] = h.qubits[0];
    if (g.kind == GateKind::Barrier)
      gates_.push_back(h);
    else
      add(h);
  }
}

void Circuit::append(const Circuit& c) { append(c, identity_layout(c.n_)); }

bool operator==(const Circuit& a, const Circuit& b) {
  return a.num_qubits() == b.num_qubits() && a.gates() == b.gates() &&
         a.input_layout() == b.input_layout() &&
         a.output_layout() == b.output_layout();
}

unsigned two_qubit_weight(const Gate& g) {
  if (!g.is_two_qubit()) return 0;
  return g.kind == GateKind::Givens ? 2 : 1;
}

unsigned two_qubit_count(const Circuit& c) {
  unsigned s = 0;
  for (const Gate& g : c.gates()) s += two_qubit_weight(g);
  return s;
}

unsigned two_qubit_depth(const Circuit& c) {
  std::vector<unsigned> level(c.num_qubits(), 0);
  unsigned floor = 0;
  unsigned depth = 0;
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Barrier) {
      floor = depth;
      continue;
    }
    if (!g.is_two_qubit()) continue;
    unsigned l = std::max({level[g.qubits[0]], level[g.qubits[1]], floor}) +
                 two_qubit_weight(g);
    level[g.qubits[0]] = level[g.qubits[1]] = l;
    depth = std::max(depth, l);
  }
  return depth;
}

Circuit invert(const Circuit& c) {
  Circuit out(c.num_qubits());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    if (it->kind == GateKind::Barrier) {
      out.add_barrier();
      continue;
    }
    for (const Gate& g : it->inverse()) out.add(g);
  }
  out.set_input_layout(c.output_layout());
  out.set_output_layout(c.input_layout());
  return out;
}

std::vector<unsigned> identity_layout(unsigned n) {
  std::vector<unsigned> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool is_permutation(const std::vector<unsigned>& p, unsigned n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (unsigned v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<unsigned> inverse_permutation(const std::vector<unsigned>& p) {
  std::vector<unsigned> inv(p.size());
  for (unsigned i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

}  // namespace fermispec
