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


#include <catch_amalgamated.hpp>

#include "fermispec/cz_graph.hpp"
#include "fermispec/interleave.hpp"
#include "fermispec/statevector.hpp"
#include "fermispec/tableau.hpp"

using namespace fermispec;

namespace {

CZGraph random_graph(unsigned n, unsigned edges, std::mt19937_64& rng) {
  CZGraph g(n);
  std::uniform_int_distribution<unsigned> q(0, n - 1);
  edges = std::min(edges, n * (n - 1) / 2);
  while (g.num_edges() < edges) {
    const unsigned a = q(rng), b = q(rng);
    if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
  }
  return g;
}

}  // namespace

TEST_CASE("decimation on random graphs matches the dense oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<unsigned> nq(2, 10), ne(0, 20);
  for (int trial = 0; trial < 50; ++trial) {
    const CZGraph g = random_graph(nq(rng), ne(rng), rng);
    const Circuit c = decimate(g);
    INFO("graph " << write_edge_list(g));
    CHECK(two_qubit_count(c) <= g.num_edges());
    CHECK(phase_distance(circuit_unitary(c), circuit_unitary(g.circuit())) < 1e-9);
    CHECK(verify_equivalence(c, g));
  }
}

TEST_CASE("diagonal Clifford tracks the graph rewrite of each rule") {
  std::mt19937_64 rng(5);
  const CZGraph g = random_graph(6, 9, rng);
  for (DecimationRule rule : {DecimationRule::CzRemoval, DecimationRule::CxConjugation,
                              DecimationRule::CxCyWrap}) {
    for (const auto& [i, j] : g.edges()) {
      DiagonalClifford d(g);
      const DecimationStep step{rule, i, j};
      d.apply(step);
      CHECK(d.graph == apply_rule(g, step));
    }
  }
}

TEST_CASE("edge lists round trip") {
  std::mt19937_64 rng(1);
  const CZGraph g = random_graph(7, 12, rng);
  CHECK(parse_edge_list(write_edge_list(g)) == g);
}

TEST_CASE("depth penalty trades count for depth") {
  const CZGraph g = interleave_cz_graph(interleave_permutation(27, 3));
  const Circuit flat = decimate(g, 0.0);
  const Circuit deep = decimate(g, 2.0);
  CHECK(verify_equivalence(flat, g));
  CHECK(verify_equivalence(deep, g));
  CHECK(two_qubit_count(flat) <= g.num_edges());
}
