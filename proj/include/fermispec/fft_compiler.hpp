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

#include "fermispec/circuit.hpp"
#include "fermispec/interleave.hpp"

namespace fermispec {

struct FFTPlan {
  unsigned num_modes = 2;
  unsigned radix = 2;
  InterleaveStrategy interleave = InterleaveStrategy::GraphDecimated;
  double depth_penalty = kDefaultDepthPenalty;
};

/** Throws std::invalid_argument unless N = radix^k, k >= 1, radix in {2,3}. */
void validate_plan(const FFTPlan& plan);

/** Radix for which N is a power (2 preferred), if any. */
std::optional<unsigned> compilable_radix(unsigned num_modes);

/**
 * Base Fourier circuits with mode transform exactly DFT_2 and DFT_3 (global
 * phase 1): two and six two-qubit gates.
 */
Circuit base_fft(unsigned n);

/**
 * Recursive fermionic Fourier transform. Per level on N = n M modes:
 * interleave(N, n), FFT_M on each contiguous block, twiddle rotations
 * exp(2 pi i b l / N) on position l M + b, interleave(N, M), FFT_n on
 * each contiguous block, interleave(N, n). The mode transform of the result
 * is DFT_N; software reorderings show up in the output layout.
 */
Circuit compile_fft(const FFTPlan& plan);

/** Momenta k = 2 pi m / N with 2 nu cos k < 0, as indices m. */
std::vector<unsigned> negative_energy_momenta(unsigned num_modes, double nu);

/**
 * X on the qubits of the filled momentum modes followed by the inverse
 * Fourier circuit. Output positions are the real-space modes.
 */
Circuit ground_state_prep_circuit(
    unsigned num_modes, const std::vector<unsigned>& filled_momenta,
    InterleaveStrategy interleave = InterleaveStrategy::GraphDecimated);

}  // namespace fermispec
