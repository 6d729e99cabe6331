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
#include <vector>

#include <Eigen/Dense>

#include "fermispec/circuit.hpp"

namespace fermispec {

/**
 * Single-particle action of a particle-conserving unitary U, in the
 * Heisenberg form U c_j U^dag = sum_l T(j, l) c_l. Rows and columns are mode
 * positions; the circuit layouts translate positions to qubits.
 *
 * With this convention T(U1 then U2) = T(U1) T(U2), and the Fourier
 * transform F_N has T = DFT_N with entries exp(2 pi i j l / N) / sqrt(N).
 */
struct ModeTransform {
  Eigen::MatrixXcd matrix;

  unsigned size() const { return static_cast<unsigned>(matrix.rows()); }
  double unitarity_error() const;
};

/** Restricted to the single-excitation sector; rejects X, CX and CY. */
ModeTransform extract_mode_transform(const Circuit& c);

/**
 * Same quantity by following the vacuum and every single excitation as a
 * sparse superposition of basis states. CX, CY and X are allowed as long as
 * the whole circuit conserves particle number (checked at the end), so
 * software-reordered circuits with CX ladders work at any size.
 */
ModeTransform sparse_mode_transform(const Circuit& c);

/** Same quantity from dense statevector runs, one per input mode. */
ModeTransform mode_transform_from_statevector(const Circuit& c);

/**
 * Largest deviation of the two-particle amplitudes of c from the Slater
 * determinants predicted by its mode transform. Catches wrong Jordan-Wigner
 * phases that the single-excitation sector cannot see.
 */
double two_particle_consistency_error(const Circuit& c);

Eigen::MatrixXcd dft_matrix(unsigned n);

/** max |A - z B| minimized over unit scalars z. */
double max_error_up_to_phase(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b);

/** C(i, j) = <c_i^dag c_j>. */
struct GaussianState {
  Eigen::MatrixXcd corr;

  static GaussianState vacuum(unsigned n);
  /** Slater determinant of the given orbitals; column k is orbital k. */
  static GaussianState from_orbitals(const Eigen::MatrixXcd& orbitals);
  static GaussianState from_occupations(const std::vector<double>& occ);

  unsigned size() const { return static_cast<unsigned>(corr.rows()); }
  Eigen::VectorXd occupations() const;
  /** Hermiticity and spectrum in [0, 1], within tol. */
  bool is_valid(double tol = 1e-10) const;
};

/** State after U with U c_j U^dag = sum_l T(j,l) c_l: C -> T^t C conj(T). */
GaussianState evolve_gaussian(const GaussianState& state,
                              const ModeTransform& t);

/**
 * Single-particle matrix h of the coupled system and environment,
 * H = sum h(a,b) a^dag b, on interleaved modes c_0, d_0, c_1, d_1, ...
 * Hopping nu between neighbouring system sites with periodic boundary,
 * epsilon/2 between c_j and d_j, omega on every d_j.
 */
Eigen::MatrixXd hamiltonian_mode_matrix(unsigned n_sites, double nu,
                                        double epsilon, double omega);

/** exp(-i H t) for quadratic H through one Hermitian eigendecomposition. */
class QuadraticEvolution {
 public:
  explicit QuadraticEvolution(const Eigen::MatrixXd& h);
  /** Mode transform of exp(-i H t), which is exp(i h t). */
  ModeTransform transform(double t) const;
  const Eigen::VectorXd& energies() const { return evals_; }
  const Eigen::MatrixXd& orbitals() const { return evecs_; }

 private:
  Eigen::VectorXd evals_;
  Eigen::MatrixXd evecs_;
};

}  // namespace fermispec
