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

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermispec {

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GateKind {
  CZ,
  CX,
  CY,
  SWAP,
  FSWAP,
  X,
  Z,
  S,
  Sdg,
  Rz,
  Givens,
  Barrier
};

/** Tolerance used when comparing gate angles. */
inline constexpr double kAngleTol = 1e-12;

std::string kind_name(GateKind kind);
unsigned kind_arity(GateKind kind);
bool kind_has_angle(GateKind kind);

/**
 * A single gate acting on one or two qubits.
 *
 * Conventions (|1> is an occupied mode):
 *   Rz(a)      = diag(exp(-ia/2), exp(ia/2))
 *   Givens(t)  = exp(i t (XX + YY) / 2), so |01> -> cos t |01> + i sin t |10>
 *   CX(c, t)   control first
 *   CY(c, t)   controlled iY, equal to CZ(c,t) CX(c,t)
 *   FSWAP      SWAP followed by CZ
 */
struct Gate {
  GateKind kind = GateKind::Barrier;
  std::array<unsigned, 2> qubits{0, 0};
  double angle = 0.0;

  unsigned arity() const { return kind_arity(kind); }
  bool is_two_qubit() const { return arity() == 2; }

  static Gate cz(unsigned a, unsigned b) { return make2(GateKind::CZ, a, b); }
  static Gate cx(unsigned c, unsigned t) { return make2(GateKind::CX, c, t); }
  static Gate cy(unsigned c, unsigned t) { return make2(GateKind::CY, c, t); }
  static Gate swap(unsigned a, unsigned b) {
    return make2(GateKind::SWAP, a, b);
  }
  static Gate fswap(unsigned a, unsigned b) {
    return make2(GateKind::FSWAP, a, b);
  }
  static Gate givens(double theta, unsigned a, unsigned b) {
    Gate g = make2(GateKind::Givens, a, b);
    g.angle = theta;
    return g;
  }
  static Gate x(unsigned q) { return make1(GateKind::X, q); }
  static Gate z(unsigned q) { return make1(GateKind::Z, q); }
  static Gate s(unsigned q) { return make1(GateKind::S, q); }
  static Gate sdg(unsigned q) { return make1(GateKind::Sdg, q); }
  static Gate rz(double alpha, unsigned q) {
    Gate g = make1(GateKind::Rz, q);
    g.angle = alpha;
    return g;
  }
  static Gate barrier() { return Gate{}; }

  /** Gate sequence implementing the inverse, in circuit order. */
  std::vector<Gate> inverse() const;

  std::string str() const;

 private:
  static Gate make1(GateKind k, unsigned q) {
    Gate g;
    g.kind = k;
    g.qubits = {q, q};
    return g;
  }
  static Gate make2(GateKind k, unsigned a, unsigned b) {
    Gate g;
    g.kind = k;
    g.qubits = {a, b};
    return g;
  }
};

bool operator==(const Gate& a, const Gate& b);
inline bool operator!=(const Gate& a, const Gate& b) { return !(a == b); }

/**
 * Ordered gate list on a fixed register.
 *
 * The layouts map a fermionic mode position to the qubit holding it, before
 * and after the circuit. They stay the identity unless the circuit reorders
 * modes in software (the swaps of an interleave are then absorbed into the
 * relabelling and only the CZ phases are emitted).
 */
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(unsigned num_qubits);

  unsigned num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  const std::vector<unsigned>& input_layout() const { return in_layout_; }
  const std::vector<unsigned>& output_layout() const { return out_layout_; }
  void set_input_layout(std::vector<unsigned> layout);
  void set_output_layout(std::vector<unsigned> layout);
  bool has_trivial_layouts() const;

  void add(const Gate& g);
  void add_barrier() { gates_.push_back(Gate::barrier()); }
  /** Append c's gates; qubit q of c is placed on qubit map[q]. */
  void append(const Circuit& c, const std::vector<unsigned>& map);
  void append(const Circuit& c);

 private:
  unsigned n_ = 0;
  std::vector<Gate> gates_;
  std::vector<unsigned> in_layout_;
  std::vector<unsigned> out_layout_;
};

bool operator==(const Circuit& a, const Circuit& b);

/**
 * Native two-qubit interactions in a gate: a Givens rotation is the product
 * of commuting XX and YY rotations and counts twice, every other two-qubit
 * kind once.
 */
unsigned two_qubit_weight(const Gate& g);

/** Sum of two_qubit_weight over the circuit. */
unsigned two_qubit_count(const Circuit& c);
/** ASAP layering of two-qubit gates; barriers start a fresh layer. */
unsigned two_qubit_depth(const Circuit& c);
Circuit invert(const Circuit& c);

std::vector<unsigned> identity_layout(unsigned n);
bool is_permutation(const std::vector<unsigned>& p, unsigned n);
std::vector<unsigned> inverse_permutation(const std::vector<unsigned>& p);

}  // namespace fermispec
