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

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "fermispec/statevector.hpp"

namespace fermispec {

/**
 * Number-conserving many-body Hamiltonian on M modes in Jordan-Wigner
 * (qubit) order: hoppings, on-site energies and density-density terms.
 */
class FermionHamiltonian {
 public:
  explicit FermionHamiltonian(unsigned num_modes) : m_(num_modes) {}

  unsigned num_modes() const { return m_; }

  /** amp a^dag b + conj(amp) b^dag a */
  void add_hopping(unsigned a, unsigned b, cplx amp);
  void add_number(unsigned a, double mu);
  /** v n_a n_b */
  void add_density(unsigned a, unsigned b, double v);

  struct Hop {
    unsigned a, b;
    cplx amp;
  };
  struct Density {
    unsigned a, b;
    double v;
  };
  const std::vector<Hop>& hoppings() const { return hops_; }
  const std::vector<double>& onsite() const { return onsite_; }
  const std::vector<Density>& densities() const { return dens_; }

 private:
  unsigned m_;
  std::vector<Hop> hops_;
  std::vector<double> onsite_ = std::vector<double>(m_, 0.0);
  std::vector<Density> dens_;
};

/** Periodic tight-binding ring, nu sum (c_j^dag c_{j+1} + h.c.), plus V n_j n_{j+1}. */
FermionHamiltonian ring_hamiltonian(unsigned n_sites, double nu, double v);

/** Basis states with a fixed particle number, in increasing index order. */
class SectorBasis {
 public:
  SectorBasis(unsigned num_modes, unsigned particles);

  unsigned num_modes() const { return m_; }
  unsigned particles() const { return p_; }
  std::size_t size() const { return states_.size(); }
  std::uint64_t state(std::size_t i) const { return states_[i]; }
  /** Rank of a basis state with the right particle number. */
  std::size_t index(std::uint64_t s) const;

  Eigen::VectorXcd restrict(const StateVector& psi) const;
  StateVector embed(const Eigen::VectorXcd& v) const;

 private:
  unsigned m_, p_;
  std::vector<std::uint64_t> states_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

using SparseMatrixC = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

SparseMatrixC sector_matrix(const FermionHamiltonian& h,
                            const SectorBasis& basis);

/** Dense diagonalization of a sector, for small sectors only. */
struct SectorSpectrum {
  Eigen::VectorXd energies;
  Eigen::MatrixXcd vectors;
};
SectorSpectrum diagonalize(const FermionHamiltonian& h,
                           const SectorBasis& basis);

/** exp(-i H t) v by a Chebyshev expansion. */
Eigen::VectorXcd chebyshev_evolve(const SparseMatrixC& h,
                                  const Eigen::VectorXcd& v, double t,
                                  double tol = 1e-14);

}  // namespace fermispec
