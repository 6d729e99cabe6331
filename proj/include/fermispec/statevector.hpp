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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "fermispec/circuit.hpp"

namespace fermispec {

using cplx = std::complex<double>;

inline constexpr unsigned kMaxStateQubits = 20;
inline constexpr unsigned kMaxUnitaryQubits = 12;

/**
 * Dense state on up to 20 qubits. Qubit q is bit q of the basis index and
 * |1> marks an occupied fermionic mode. Jordan-Wigner strings run over the
 * qubits of lower index.
 */
class StateVector {
 public:
  explicit StateVector(unsigned num_qubits);
  StateVector(unsigned num_qubits, std::vector<cplx> amplitudes);
  static StateVector basis_state(unsigned num_qubits, std::uint64_t index);

  unsigned num_qubits() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes() { return amp_; }
  cplx operator[](std::uint64_t i) const { return amp_[i]; }

  double norm() const;
  void normalize();

  StateVector& apply(const Gate& g);
  StateVector& apply(const Circuit& c);

 private:
  unsigned n_;
  std::vector<cplx> amp_;
};

/** OpenMP kernel. */
void apply_gate_inplace(StateVector& psi, const Gate& g);
StateVector apply_gate(StateVector psi, const Gate& g);

/** 2x2 or 4x4 matrix of a gate; local bit 0 is qubits[0]. */
Eigen::MatrixXcd gate_matrix(const Gate& g);

namespace reference {
/** Serial kernel through gate_matrix, kept as the oracle for the fast path. */
void apply_gate(StateVector& psi, const Gate& g);
}  // namespace reference

/** Dense unitary of the gate list (layouts ignored); at most 12 qubits. */
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

/** min over unit phases z of max |A - z B|. */
double phase_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

cplx inner(const StateVector& a, const StateVector& b);

/** Jordan-Wigner annihilation c_q in qubit order. Result is not normalized. */
StateVector annihilate(const StateVector& psi, unsigned q);
StateVector create(const StateVector& psi, unsigned q);

/**
 * <c_a^dag c_b> for a, b drawn from modes, returned as a |modes| square
 * matrix.
 */
Eigen::MatrixXcd one_body_correlation(const StateVector& psi,
                                      const std::vector<unsigned>& modes);

double z_expectation(const StateVector& psi, unsigned q);

/**
 * Multinomial Z-basis sampling: returns the empirical occupation of each
 * qubit over the given number of shots.
 */
std::vector<double> sampled_occupations(const StateVector& psi,
                                        std::uint64_t shots,
                                        std::mt19937_64& rng);

}  // namespace fermispec
