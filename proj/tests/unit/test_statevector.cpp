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
#include "helpers.hpp"

using namespace fermispec;

namespace {

StateVector random_state(unsigned n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> a(std::size_t{1} << n);
  for (auto& x : a) x = {g(rng), g(rng)};
  StateVector s(n, a);
  s.normalize();
  return s;
}

}  // namespace

TEST_CASE("fast kernel matches the serial reference") {
  std::mt19937_64 rng(3);
  for (unsigned n : {1u, 2u, 5u, 13u}) {
    const Circuit c = testing::random_circuit(n, 60, rng);
    StateVector fast = random_state(n, rng);
    StateVector slow = fast;
    for (const Gate& g : c.gates()) {
      apply_gate_inplace(fast, g);
      reference::apply_gate(slow, g);
    }
    double err = 0.0;
    for (std::uint64_t i = 0; i < fast.dim(); ++i)
      err = std::max(err, std::abs(fast[i] - slow[i]));
    CHECK(err < 1e-12);
  }
}

TEST_CASE("gate identities") {
  auto u = [](std::initializer_list<Gate> gates) {
    Circuit c(2);
    for (const Gate& g : gates) c.add(g);
    return circuit_unitary(c);
  };
  // CY = CZ CX, FSWAP = CZ SWAP
  CHECK(phase_distance(u({Gate::cy(0, 1)}), u({Gate::cx(0, 1), Gate::cz(0, 1)})) < 1e-12);
  CHECK(phase_distance(u({Gate::fswap(0, 1)}), u({Gate::swap(0, 1), Gate::cz(0, 1)})) < 1e-12);
  // Givens(pi/2) maps |01> to i|10>
  StateVector s = StateVector::basis_state(2, 1);
  s.apply(Gate::givens(1.5707963267948966, 0, 1));
  CHECK(std::abs(s[2] - cplx(0, 1)) < 1e-12);
}

TEST_CASE("Rz convention") {
  StateVector s = StateVector::basis_state(1, 1);
  s.apply(Gate::rz(0.8, 0));
  CHECK(std::abs(s[1] - std::polar(1.0, 0.4)) < 1e-12);
}

TEST_CASE("register cap") {
  CHECK_THROWS_AS(StateVector(kMaxStateQubits + 1), CircuitError);
}

TEST_CASE("sampled occupations converge to exact ones") {
  std::mt19937_64 rng(9);
  const StateVector s = random_state(4, rng);
  std::mt19937_64 shots_rng(1);
  const auto occ = sampled_occupations(s, 200000, shots_rng);
  for (unsigned q = 0; q < 4; ++q)
    CHECK(std::abs(occ[q] - (1.0 - z_expectation(s, q)) / 2.0) < 0.01);
}

TEST_CASE("one-body correlation is Hermitian with the right trace") {
  StateVector s = StateVector::basis_state(4, 0b1011);
  s.apply(Gate::givens(0.7, 1, 2));
  const Eigen::MatrixXcd c = one_body_correlation(s, {0, 1, 2, 3});
  CHECK((c - c.adjoint()).norm() < 1e-12);
  CHECK(std::abs(c.trace() - cplx(3.0)) < 1e-12);
}
