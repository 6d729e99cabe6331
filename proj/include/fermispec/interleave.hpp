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

#include <string>
#include <vector>

#include "fermispec/circuit.hpp"
#include "fermispec/cz_graph.hpp"

namespace fermispec {

/**
 * Mode reordering that lists positions 0, n, 2n, ... first, then 1, n+1, ...
 * sigma[p] is the new position of the mode found at position p, so
 * sigma[n q + l] = l (N/n) + q.
 */
struct InterleavePermutation {
  unsigned N = 0;
  unsigned n = 0;
  std::vector<unsigned> sigma;

  /** Modes in their new order: order()[new position] = old position. */
  std::vector<unsigned> order() const { return inverse_permutation(sigma); }
};

InterleavePermutation interleave_permutation(unsigned N, unsigned n);

enum class InterleaveStrategy {
  LocalFswap,
  CxLadder,
  GraphDecimated,
  ImportedSequence
};

std::string strategy_name(InterleaveStrategy s);
/** Accepts local-fswap, cx-ladder, graph-decimated, imported. */
InterleaveStrategy parse_strategy(const std::string& s);
std::vector<InterleaveStrategy> all_strategies();

/**
 * CZ graph of the parity phase left by a software reordering: one edge per
 * pair of modes whose order the permutation inverts. Vertices are the
 * positions after the permutation, which is the labelling of the shipped
 * listings.
 */
CZGraph interleave_cz_graph(const InterleavePermutation& p);

/**
 * Circuit on N qubits implementing the fermionic reordering.
 *
 * LocalFswap moves the modes with adjacent FSWAPs and keeps trivial layouts.
 * The other strategies leave every mode on its qubit, emit only the CZ
 * phase, and record the move in the output layout (output_layout[position]
 * is the qubit holding that position afterwards).
 */
Circuit interleave_circuit(const InterleavePermutation& p,
                           InterleaveStrategy strategy,
                           double depth_penalty = kDefaultDepthPenalty);

/** The CX-ladder construction in source-position labels. */
Circuit cx_ladder_interleave(unsigned N, unsigned n);

/** Shipped listing for the 3-way interleave on 9 or 27 modes. */
Circuit imported_interleave_listing(unsigned N);

/**
 * Appends SWAPs so that the output layout becomes the identity. Turns a
 * software reordering into a physical one for tableau or unitary checks.
 */
Circuit materialize_layout(const Circuit& c);

}  // namespace fermispec
