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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fermispec/circuit.hpp"

namespace fermispec {

/** Simple undirected graph; U_G is the product of CZ over its edges. */
class CZGraph {
 public:
  explicit CZGraph(unsigned num_qubits = 0);
  CZGraph(unsigned num_qubits,
          const std::vector<std::pair<unsigned, unsigned>>& edges);

  unsigned num_qubits() const { return n_; }
  bool has_edge(unsigned i, unsigned j) const;
  void add_edge(unsigned i, unsigned j);
  void toggle_edge(unsigned i, unsigned j);
  std::size_t num_edges() const;
  std::size_t degree(unsigned i) const;
  /** Sorted (i < j) pairs. */
  std::vector<std::pair<unsigned, unsigned>> edges() const;
  const std::vector<std::uint64_t>& neighbourhood(unsigned i) const {
    return adj_[i];
  }

  /** One CZ per edge in sorted order. */
  Circuit circuit() const;

  friend bool operator==(const CZGraph& a, const CZGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check(unsigned i, unsigned j) const;
  unsigned n_;
  std::vector<std::vector<std::uint64_t>> adj_;
};

/** One "i j" pair per line; '#' starts a comment; "# qubits N" sizes it. */
CZGraph parse_edge_list(std::string_view text);
CZGraph read_edge_list_file(const std::string& path);
std::string write_edge_list(const CZGraph& g);

enum class DecimationRule { CzRemoval, CxConjugation, CxCyWrap };

std::string rule_name(DecimationRule r);

/**
 * U_G = L U_G' R with (L, R) = (CZ_ij, I), (CX_ij, CX_ij) or (CX_ij, CY_ij);
 * i is the control of the CX and CY.
 */
struct DecimationStep {
  DecimationRule rule = DecimationRule::CzRemoval;
  unsigned i = 0, j = 0;
  int cost() const { return rule == DecimationRule::CzRemoval ? 1 : 2; }
  friend bool operator==(const DecimationStep&, const DecimationStep&) = default;
};

/**
 * Graph part of a rewrite. CxConjugation toggles (i,k) for k in n(j),
 * CxCyWrap toggles (i,k) for k in n(j) + {j}; the pair (i,i) is dropped (it
 * is a Z on qubit i, see DiagonalClifford).
 */
CZGraph apply_rule(const CZGraph& g, const DecimationStep& step);

/**
 * Diagonal Clifford i^{sum p_q x_q} (-1)^{sum_E x_a x_b}. Conjugating a CZ
 * graph by CX can leave single-qubit phases; this keeps them exact.
 */
struct DiagonalClifford {
  CZGraph graph;
  std::vector<unsigned> s_power;  // mod 4

  explicit DiagonalClifford(const CZGraph& g)
      : graph(g), s_power(g.num_qubits(), 0) {}
  void apply(const DecimationStep& step);
  /** Z/S/Sdg layer for the phases, after the graph has been emptied. */
  Circuit phase_circuit() const;
};

struct DecimationResult {
  Circuit circuit;
  std::vector<DecimationStep> steps;
};

inline constexpr double kDefaultDepthPenalty = 0.5;

/**
 * Greedy decimation: each step minimizes |G'| - |G| + C plus depth_penalty
 * when the step opens a new layer. Only steps with |G'| - |G| + C <= 0 are
 * eligible, which keeps the gate count at or below |E|. Ties break on
 * (rule, i, j).
 */
DecimationResult decimate_with_steps(const CZGraph& g,
                                     double depth_penalty = kDefaultDepthPenalty);
Circuit decimate(const CZGraph& g, double depth_penalty = kDefaultDepthPenalty);

/** Tableau comparison of c against U_G, including signs. */
bool verify_equivalence(const Circuit& c, const CZGraph& g);

}  // namespace fermispec
