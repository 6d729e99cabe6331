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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fermispec/circuit.hpp"
#include "fermispec/fock.hpp"
#include "fermispec/spectral.hpp"
#include "fermispec/statevector.hpp"

namespace fermispec {

/**
 * One factor of a product formula, on Jordan-Wigner mode labels:
 *   Hop      exp(-i angle (a^dag b + b^dag a))
 *   Number   exp(-i angle n_a)
 *   Density  exp(-i angle n_a n_b)
 */
struct TrotterTerm {
  enum class Kind { Hop, Number, Density };
  Kind kind;
  unsigned a;
  unsigned b;
  double angle;
};

/**
 * Factors of one step of length dt, in this order: hopping on even bonds,
 * hopping on odd bonds, interaction, coupling, environment energy. Bond j
 * joins sites j and j+1 mod N. Without the environment the last two groups
 * are dropped and site j is mode j; with it, c_j is mode 2j and d_j is
 * mode 2j+1. Zero-angle factors are omitted.
 */
std::vector<TrotterTerm> trotter_step_terms(const ProtocolConfig& cfg,
                                            double dt, bool with_environment);

/** Gate realisation of the factors on a register in mode order. */
Circuit trotter_terms_circuit(const std::vector<TrotterTerm>& terms,
                              unsigned num_modes);

/** Many-body Hamiltonian whose product formula the step terms are. */
FermionHamiltonian protocol_hamiltonian(const ProtocolConfig& cfg,
                                        bool with_environment);

/** Fixed particle-number state on a SectorBasis. */
struct FockState {
  SectorBasis basis;
  Eigen::VectorXcd amp;

  static FockState vacuum(unsigned num_modes);
  double norm() const { return amp.norm(); }
};

void apply_term(FockState& s, const TrotterTerm& term);
void apply_terms(FockState& s, const std::vector<TrotterTerm>& terms);

/** sum_j coef_j c_j applied to s; the result has one particle less. */
FockState annihilate(const FockState& s, const Eigen::VectorXcd& coef);
/** sum_j coef_j c_j^dag applied to s. */
FockState create(const FockState& s, const Eigen::VectorXcd& coef);
cplx inner(const FockState& a, const FockState& b);
/** C(i, j) = <c_modes[i]^dag c_modes[j]>. */
Eigen::MatrixXcd one_body_correlation(const FockState& s,
                                      const std::vector<unsigned>& modes);

/** Coefficients of c(k) = N^{-1/2} sum_j exp(-i k j) c_j on modes map[j]. */
Eigen::VectorXcd momentum_mode(unsigned n_sites, unsigned m,
                               const std::vector<unsigned>& map,
                               unsigned num_modes);

/** Lowest eigenstate of the ring Hamiltonian (hopping nu, interaction V). */
struct SystemGroundState {
  FockState state;
  double energy = 0.0;
  /** Distance to the next level in the same sector. */
  double gap = 0.0;
};

/**
 * Initial system state of the protocol on N modes: the ground state (by
 * filling momenta for V = 0, exact diagonalization otherwise, or a fixed
 * sector when cfg.particles >= 0), or the momentum product state of rho when
 * every rho_k is 0 or 1.
 */
SystemGroundState initial_system_state(const ProtocolConfig& cfg);

/** <c^dag(k) c(k)> for every momentum of an N-site state. */
Eigen::VectorXd momentum_occupations(const FockState& s);

/**
 * System state on the interleaved 2N-mode register, environment empty or
 * filled (d_0^dag ... d_{N-1}^dag applied in that order).
 */
FockState couple_to_environment(const FockState& system, EnvironmentFill fill);

/**
 * The protocol on the fixed-particle-number sector of the 2N modes: exact
 * evolution by Chebyshev expansion when trotter_steps is 0, the product
 * formula of trotter_step_terms otherwise. Readout is the environment
 * correlation matrix rotated to momenta.
 */
SpectralGrid nk_many_body(const ProtocolConfig& cfg,
                          const std::vector<double>& omegas);

/**
 * Gate-level protocol for one omega on 2N qubits:
 *   1. ground-state preparation (inverse Fourier circuit on the system
 *      qubits) unless the initial state has to be loaded;
 *   2. environment fill: X on every environment qubit and Z on system
 *      qubit i whenever N - i is odd, which makes the qubit state equal to
 *      the fermionic filled state;
 *   3. Trotter steps;
 *   4. 2-way interleave that gathers the environment into the upper half,
 *      then a Fourier circuit on it, when N has a compiled transform.
 * Gates act on qubits; layout tracks which qubit holds each mode position.
 */
struct ProtocolCircuit {
  Circuit circuit;
  /** Set when step 1 is replaced by loading this state (before step 2). */
  std::optional<StateVector> loaded_state;
  /** Qubit measured for momentum m when the Fourier readout is present. */
  std::vector<unsigned> momentum_qubits;
  /** Qubit of d_j when the correlation matrix has to be read instead. */
  std::vector<unsigned> environment_qubits;
  bool fourier_readout = false;
};

ProtocolCircuit protocol_circuit(const ProtocolConfig& cfg, double omega);

/** Statevector run of protocol_circuit for every omega. */
SpectralGrid run_circuit_protocol(const ProtocolConfig& cfg,
                                  const std::vector<double>& omegas);

}  // namespace fermispec
