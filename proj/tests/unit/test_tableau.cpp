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

#include "fermispec/statevector.hpp"
#include "fermispec/tableau.hpp"
#include "helpers.hpp"

using namespace fermispec;

TEST_CASE("tableau equality agrees with dense unitaries on random pairs") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<unsigned> len(1, 12);
  unsigned equal_pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + trial % 4;
    const Circuit a = testing::random_circuit(n, len(rng), rng, true);
    // half the pairs are built equal by padding with an identity
    Circuit b(n);
    if (trial % 2 == 0) {
      b = a;
      const Circuit pad = testing::random_circuit(n, 4, rng, true);
      b.append(pad);
      b.append(invert(pad));
    } else {
      b = testing::random_circuit(n, len(rng), rng, true);
    }
    const bool dense = phase_distance(circuit_unitary(a), circuit_unitary(b)) < 1e-9;
    const bool tab = tableau_of(a) == tableau_of(b);
    CHECK(dense == tab);
    equal_pairs += dense;
  }
  CHECK(equal_pairs >= 100);
}

TEST_CASE("tableaux stay symplectic") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(tableau_of(testing::random_circuit(6, 40, rng, true)).is_symplectic());
}

TEST_CASE("non-Clifford gates are refused") {
  Circuit c(2);
  c.add(Gate::rz(0.3, 0));
  CHECK_FALSE(is_clifford_gate(c.gates()[0]));
  CHECK_THROWS(tableau_of(c));
  Circuit quarter(1);
  quarter.add(Gate::rz(1.5707963267948966, 0));
  CHECK(is_clifford_gate(quarter.gates()[0]));
}

TEST_CASE("S squared is Z") {
  Circuit a(1), b(1);
  a.add(Gate::s(0));
  a.add(Gate::s(0));
  b.add(Gate::z(0));
  CHECK(tableau_of(a) == tableau_of(b));
}
