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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fermispec/interleave.hpp"

namespace fermispec {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class EnvironmentFill { Empty, Full };
enum class InitialState { GroundState, Occupations };

std::string fill_name(EnvironmentFill f);
std::string initial_state_name(InitialState s);

/**
 * System of N ring sites (hopping nu, neighbour interaction V) coupled site
 * by site to N environment modes:
 *
 *   H = H_sys + epsilon/2 sum_j (d_j^dag c_j + h.c.) + omega sum_j n(d_j)
 *
 * The state evolves with exp(-i H t). Modes are interleaved c_0, d_0, c_1,
 * d_1, ... in Jordan-Wigner order. Momenta are k = 2 pi m / N with
 * c(k) = N^{-1/2} sum_j exp(-i k j) c_j.
 */
struct ProtocolConfig {
  unsigned N = 9;
  double epsilon = 0.1;
  double omega = 0.0;
  double t = 5.0;
  double nu = 1.0;
  double V = 0.0;
  /** 0 runs continuous time. */
  unsigned trotter_steps = 0;
  EnvironmentFill fill = EnvironmentFill::Empty;
  InitialState initial = InitialState::GroundState;
  /** Momentum occupations rho_k, used when initial == Occupations. */
  std::vector<double> rho;
  /** Particle number of the ground state; -1 takes the lowest sector. */
  int particles = -1;
  InterleaveStrategy interleave = InterleaveStrategy::GraphDecimated;
  /** 0 gives exact expectation values. */
  std::uint64_t shots = 0;
  std::uint64_t seed = 1;
  /** Time samples for exact-evolution correlation integrals (odd). */
  unsigned quadrature_points = 2001;

  /** Throws ConfigError naming the offending field. */
  void validate() const;
};

std::vector<double> momentum_grid(unsigned n);
std::vector<double> linspace(double lo, double hi, unsigned count);
/** count points on [-3, 3] max(|nu|, 1). */
std::vector<double> default_omega_grid(double nu, unsigned count = 26);

/**
 * Samples over (k, omega): values(m, w) belongs to k[m], omega[w].
 * Protocol outputs are occupations and lie in [0, 1].
 */
struct SpectralGrid {
  std::vector<double> k;
  std::vector<double> omega;
  Eigen::MatrixXd values;
  std::string method;
  ProtocolConfig config;
  std::map<std::string, std::string> notes;

  double min() const { return values.minCoeff(); }
  double max() const { return values.maxCoeff(); }
  std::size_t count_below(double threshold) const;
};

SpectralGrid make_grid(const ProtocolConfig& cfg,
                       const std::vector<double>& omegas,
                       const std::string& method);

/**
 * <c^dag(k) c(k)> of the initial system state: rho for Occupations, filled
 * negative-energy momenta for the free ground state, exact diagonalization
 * otherwise.
 */
Eigen::VectorXd momentum_occupations(const ProtocolConfig& cfg);

/**
 * Closed form for V = 0. Empty environment gives
 *   <n(k)> = eps^2 sin^2(t Om) / (eps^2 + x^2) rho_k,
 *   Om = sqrt(eps^2 + x^2) / 2,  x = omega - 2 nu cos k;
 * a full environment gives <1 - n(k)> by the same expression with the hole
 * density 1 - rho_k.
 */
SpectralGrid nk_exact_free(const ProtocolConfig& cfg,
                           const std::vector<double>& omegas);

/** Continuous-time correlation-matrix simulation of the same quantity. */
SpectralGrid nk_gaussian(const ProtocolConfig& cfg,
                         const std::vector<double>& omegas);

/** Frequency window sin^2(omega t / 2) / omega^2, equal to t^2/4 at 0. */
struct Kernel {
  double t = 0.0;
  double operator()(double omega) const;
  /** Time-domain window (t - |v|) / 4 on [-t, t]. */
  double window(double v) const;
};

/** sum_i 2 pi weight_i delta(omega - center_i), per momentum. */
struct DeltaSpectrum {
  struct Line {
    double center;
    double weight;
  };
  std::vector<double> k;
  std::vector<std::vector<Line>> lines;
};

/** A+ of the free ring: one line at 2 nu cos k with weight rho_k. */
DeltaSpectrum free_particle_spectrum(unsigned n, double nu,
                                     const Eigen::VectorXd& rho);
/** A- of the free ring: weight 1 - rho_k. */
DeltaSpectrum free_hole_spectrum(unsigned n, double nu,
                                 const Eigen::VectorXd& rho);

/** (A * phi)(k, omega) = (1/2pi) int A(k, w') phi(omega - w') dw'. */
SpectralGrid convolve_kernel(const DeltaSpectrum& a, const Kernel& kern,
                             const std::vector<double>& omegas);
/** Sampled input integrated by the trapezoid rule over a.omega. */
SpectralGrid convolve_kernel(const SpectralGrid& a, const Kernel& kern,
                             const std::vector<double>& omegas);

struct BroadeningGhosts {
  double delta_omega;
  double ratio_r;
  unsigned n;
};
BroadeningGhosts broadening_and_ghosts(double epsilon, double t);

/**
 * Leading order in nu:
 *   <n_k> = sin^2(t Om0) eps^2 / (omega^2 + eps^2) rho_k,
 *   Om0 = sqrt(omega^2 + eps^2) / 2.
 * With a full environment rho_k is replaced by 1 - rho_k and the value is
 * <1 - n_k>.
 */
SpectralGrid strong_coupling_leading(const ProtocolConfig& cfg,
                                     const Eigen::VectorXd& rho,
                                     const std::vector<double>& omegas);

/**
 * First local maximum of the closed form beyond its first zero: distance
 * from the resonance and height relative to the resonance value. Found by
 * Brent minimization between the first two zeros.
 */
struct SecondaryPeak {
  double offset;
  double relative_height;
};
SecondaryPeak secondary_peak(double epsilon, double t);

}  // namespace fermispec
