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

#include "fermispec/fock.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace fermispec {

namespace {

using u64 = std::uint64_t;

inline double jw_sign(u64 x, unsigned q) {
  return (std::popcount(x & ((u64{1} << q) - 1)) & 1) ? -1.0 : 1.0;
}

void check_mode(unsigned m, unsigned a) {
  if (a >= m) throw std::invalid_argument("mode index out of range");
}

}  // namespace

void FermionHamiltonian::add_hopping(unsigned a, unsigned b, cplx amp) {
  check_mode(m_, a);
  check_mode(m_, b);
  if (a == b) {
    onsite_[a] += 2.0 * amp.real();
    return;
  }
  hops_.push_back({a, b, amp});
}

void FermionHamiltonian::add_number(unsigned a, double mu) {
  check_mode(m_, a);
  onsite_[a] += mu;
}

void FermionHamiltonian::add_density(unsigned a, unsigned b, double v) {
  check_mode(m_, a);
  check_mode(m_, b);
  if (a == b) {
    onsite_[a] += v;
    return;
  }
  dens_.push_back({a, b, v});
}

FermionHamiltonian ring_hamiltonian(unsigned n_sites, double nu, double v) {
  if (n_sites < 2) throw std::invalid_argument("ring needs at least 2 sites");
  FermionHamiltonian h(n_sites);
  for (unsigned j = 0; j < n_sites; ++j) {
    unsigned k = (j + 1) % n_sites;
    h.add_hopping(j, k, nu);
    if (v != 0.0) h.add_density(j, k, v);
  }
  return h;
}

SectorBasis::SectorBasis(unsigned num_modes, unsigned particles)
    : m_(num_modes), p_(particles) {
  if (m_ > 62 || p_ > m_)
    throw std::invalid_argument("invalid particle-number sector");
  binom_.assign(m_ + 1, std::vector<u64>(p_ + 2, 0));
  for (unsigned n = 0; n <= m_; ++n) {
    binom_[n][0] = 1;
    for (unsigned k = 1; k <= std::min(n, p_ + 1); ++k)
      binom_[n][k] = binom_[n - 1][k - 1] + (k <= n - 1 ? binom_[n - 1][k] : 0);
  }
  if (p_ == 0) {
    states_.push_back(0);
    return;
  }
  // Gosper's hack enumerates fixed-weight words in increasing order
  u64 s = (u64{1} << p_) - 1;
  const u64 limit = u64{1} << m_;
  while (s < limit) {
    states_.push_back(s);
    u64 c = s & (~s + 1);
    u64 r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

std::size_t SectorBasis::index(std::uint64_t s) const {
  std::size_t rank = 0;
  unsigned i = 0;
  while (s) {
    unsigned b = static_cast<unsigned>(std::countr_zero(s));
    ++i;
    if (i <= p_ && i <= b) rank += binom_[b][i];
    s &= s - 1;
  }
  return rank;
}

Eigen::VectorXcd SectorBasis::restrict(const StateVector& psi) const {
  if (psi.num_qubits() != m_)
    throw std::invalid_argument("restrict: register size mismatch");
  Eigen::VectorXcd v(size());
  for (std::size_t i = 0; i < size(); ++i) v(i) = psi[states_[i]];
  return v;
}

StateVector SectorBasis::embed(const Eigen::VectorXcd& v) const {
  if (static_cast<std::size_t>(v.size()) != size())
    throw std::invalid_argument("embed: vector size mismatch");
  StateVector psi(m_);
  psi.amplitudes()[0] = 0.0;
  for (std::size_t i = 0; i < size(); ++i) psi.amplitudes()[states_[i]] = v(i);
  return psi;
}

SparseMatrixC sector_matrix(const FermionHamiltonian& h,
                            const SectorBasis& basis) {
  if (h.num_modes() != basis.num_modes())
    throw std::invalid_argument("sector_matrix: mode count mismatch");
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(basis.size() * (2 * h.hoppings().size() + 1));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const u64 x = basis.state(col);
    double diag = 0.0;
    for (unsigned a = 0; a < h.num_modes(); ++a)
      if (x >> a & 1) diag += h.onsite()[a];
    for (const auto& d : h.densities())
      if ((x >> d.a & 1) && (x >> d.b & 1)) diag += d.v;
    if (diag != 0.0) trip.emplace_back(col, col, diag);
    for (const auto& hop : h.hoppings()) {
      // amp a^dag b and conj(amp) b^dag a
      const unsigned ends[2][2] = {{hop.a, hop.b}, {hop.b, hop.a}};
      for (int dir = 0; dir < 2; ++dir) {
        const unsigned to = ends[dir][0], from = ends[dir][1];
        if (!(x >> from & 1) || (x >> to & 1)) continue;
        double sign = jw_sign(x, from);
        u64 y = x ^ (u64{1} << from);
        sign *= jw_sign(y, to);
        y |= u64{1} << to;
        cplx amp = dir == 0 ? hop.amp : std::conj(hop.amp);
        trip.emplace_back(basis.index(y), col, sign * amp);
      }
    }
  }
  SparseMatrixC m(basis.size(), basis.size());
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

SectorSpectrum diagonalize(const FermionHamiltonian& h,
                           const SectorBasis& basis) {
  if (basis.size() > 6000)
    throw std::invalid_argument("diagonalize: sector too large for dense");
  Eigen::MatrixXcd dense = Eigen::MatrixXcd(sector_matrix(h, basis));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXcd chebyshev_evolve(const SparseMatrixC& h,
                                  const Eigen::VectorXcd& v, double t,
                                  double tol) {
  if (t == 0.0) return v;
  // Gershgorin bounds on the real spectrum
  double lo = 0.0, hi = 0.0;
  for (Eigen::Index r = 0; r < h.outerSize(); ++r) {
    double centre = 0.0, radius = 0.0;
    for (SparseMatrixC::InnerIterator it(h, r); it; ++it) {
      if (it.col() == r)
        centre = it.value().real();
      else
        radius += std::abs(it.value());
    }
    if (r == 0) {
      lo = centre - radius;
      hi = centre + radius;
    } else {
      lo = std::min(lo, centre - radius);
      hi = std::max(hi, centre + radius);
    }
  }
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo) * 1.01 + 1e-12;
  // J_k(-z) = (-1)^k J_k(z) folds negative times into the phase sequence
  const double z = half * std::abs(t);
  // T_k of the rescaled operator (H - mid) / half
  auto apply_scaled = [&](const Eigen::VectorXcd& x) {
    Eigen::VectorXcd y = h * x;
    return ((y - mid * x) / half).eval();
  };
  Eigen::VectorXcd t_prev = v;
  Eigen::VectorXcd t_cur = apply_scaled(v);
  const cplx mi{0.0, t > 0 ? -1.0 : 1.0};
  Eigen::VectorXcd acc = std::cyl_bessel_j(0.0, z) * v;
  cplx phase = mi;
  acc += 2.0 * phase * std::cyl_bessel_j(1.0, z) * t_cur;
  unsigned small_run = 0;
  for (unsigned k = 2;; ++k) {
    Eigen::VectorXcd t_next = 2.0 * apply_scaled(t_cur) - t_prev;
    phase *= mi;
    double jk = std::cyl_bessel_j(static_cast<double>(k), z);
    acc += 2.0 * phase * jk * t_next;
    t_prev.swap(t_cur);
    t_cur.swap(t_next);
    if (k > z && std::abs(jk) < tol) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    if (k > 100000) throw std::runtime_error("chebyshev_evolve: no convergence");
  }
  return std::polar(1.0, -mid * t) * acc;
}

}  // namespace fermispec
