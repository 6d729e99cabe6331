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

#include "fermispec/circuit.hpp"
#include "fermispec/circuit_io.hpp"
#include "fermispec/statevector.hpp"
#include "helpers.hpp"

using namespace fermispec;

TEST_CASE("two-qubit weights count Givens twice") {
  Circuit c(3);
  c.add(Gate::givens(0.3, 0, 1));
  c.add(Gate::cz(1, 2));
  c.add(Gate::rz(0.2, 0));
  CHECK(two_qubit_weight(c.gates()[0]) == 2);
  CHECK(two_qubit_weight(c.gates()[1]) == 1);
  CHECK(two_qubit_weight(c.gates()[2]) == 0);
  CHECK(two_qubit_count(c) == 3);
  CHECK(two_qubit_depth(c) == 3);
}

TEST_CASE("depth packs disjoint gates into one layer") {
  Circuit c(4);
  c.add(Gate::cz(0, 1));
  c.add(Gate::cx(2, 3));
  c.add(Gate::cz(1, 2));
  CHECK(two_qubit_depth(c) == 2);
}

TEST_CASE("gates reject bad qubits") {
  Circuit c(2);
  CHECK_THROWS_AS(c.add(Gate::cz(0, 2)), CircuitError);
  CHECK_THROWS_AS(c.add(Gate::cx(1, 1)), CircuitError);
}

TEST_CASE("invert undoes a random circuit") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = testing::random_circuit(4, 30, rng);
    Circuit both = c;
    both.append(invert(c));
    const Eigen::MatrixXcd u = circuit_unitary(both);
    CHECK(phase_distance(u, Eigen::MatrixXcd::Identity(16, 16)) < 1e-12);
  }
}

TEST_CASE("text format round trips") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = testing::random_circuit(5, 25, rng);
    c.add_barrier();
    c.add(Gate::cz(0, 4));
    const Circuit back = parse_circuit(write_circuit(c));
    REQUIRE(back.num_qubits() == c.num_qubits());
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(back.gates()[i].kind == c.gates()[i].kind);
      CHECK(back.gates()[i].qubits == c.gates()[i].qubits);
      CHECK(back.gates()[i].angle == c.gates()[i].angle);
    }
  }
}

TEST_CASE("layouts survive the text format") {
  Circuit c(3);
  c.set_input_layout({2, 0, 1});
  c.set_output_layout({1, 2, 0});
  c.add(Gate::fswap(0, 1));
  CHECK(parse_circuit(write_circuit(c)) == c);
}

TEST_CASE("parser reads several gates per line and blank-line barriers") {
  const Circuit c = parse_circuit("# qubits 4\nCX(1,0)CZ(2,3)\n\nRz(2,0.5)\n");
  REQUIRE(c.num_qubits() == 4);
  REQUIRE(c.size() == 4);
  CHECK(c.gates()[2].kind == GateKind::Barrier);
  CHECK(c.gates()[3].angle == 0.5);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_circuit("CQ(0,1)\n"), CircuitError);
  CHECK_THROWS_AS(parse_circuit("CX(0)\n"), CircuitError);
  CHECK_THROWS_AS(parse_circuit("# qubits 2\nCZ(0,5)\n"), CircuitError);
}

TEST_CASE("shipped interleave listings parse") {
  CHECK(read_circuit_file(data_file("interleave_3way_9.txt")).num_qubits() == 9);
  CHECK(read_circuit_file(data_file("interleave_3way_27.txt")).num_qubits() == 27);
}
