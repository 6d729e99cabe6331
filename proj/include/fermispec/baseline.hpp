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

#include <vector>

#include "fermispec/spectral.hpp"

namespace fermispec {

/**
 * Lehmann lines of the initial system state |E>:
 *   A+ : weight |<m|c(k)|E>|^2 at E - E_m
 *   A- : weight |<m|c^dag(k)|E>|^2 at E_m - E
 * Empty selects A+, Full selects A-. Free rings use the single band line,
 * interacting ones exact diagonalization of the neighbouring sectors.
 */
DeltaSpectrum lehmann_spectrum(const ProtocolConfig& cfg);

/** (A * phi)(k, omega) of lehmann_spectrum, without quadrature. */
SpectralGrid lehmann_reference(const ProtocolConfig& cfg,
                               const std::vector<double>& omegas);

/**
 * Windowed Fourier transform of the dynamical correlation
 *   A+ : g(v) = <c^dag(k, v) c(k, 0)>     (Empty)
 *   A- : g(v) = <c(k, 0) c^dag(k, v)>     (Full)
 * with c(k, v) = exp(i H v) c(k) exp(-i H v):
 *   A(k, omega) = int_{-t}^{t} (t - |v|)/4 exp(-i omega v) g(v) dv.
 * g is computed for v >= 0 and extended by g(-v) = conj(g(v)).
 * trotter_steps = 0 samples the exact g on quadrature_points times and
 * integrates with Simpson's rule; otherwise g comes from the product formula
 * of trotter_step_terms at the step times and the trapezoid rule is used.
 * notes["negative_samples"] counts values below -1e-12.
 */
SpectralGrid dynamical_correlation_baseline(const ProtocolConfig& cfg,
                                            const std::vector<double>& omegas);

}  // namespace fermispec
