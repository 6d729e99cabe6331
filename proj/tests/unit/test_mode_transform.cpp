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

#include "fermispec/fft_compiler.hpp"
#include "fermispec/mode_transform.hpp"
#include "fermispec/statevector.hpp"
#include "helpers.hpp"

using namespace fermispec;

namespace {

Circuit random_mode_circuit(unsigned n, unsigned gates, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> q(0, n - 1), kind(0, 3);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  Circuit c(n);
  while (c.size() < gates) {
    const unsigned a = q(rng);
    switch (kind(rng)) {
      case 0: c.add(Gate::rz(ang(rng), a)); break;
      case 1: c.add(Gate::z(a)); break;
      default:
        if (a + 1 < n)
          c.add(kind(rng) % 2 ? Gate::givens(ang(rng), a, a + 1) : Gate::fswap(a, a + 1));
    }
  }
  return c;
}

}  // namespace

TEST_CASE("base transforms are DFTs") {
  for (unsigned n : {2u, 3u}) {
    const ModeTransform t = extract_mode_transform(base_fft(n));
    CHECK((t.matrix - dft_matrix(n)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("extracted transform matches the statevector and two-particle data") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = random_mode_circuit(5, 30, rng);
    const ModeTransform fast = extract_mode_transform(c);
    const ModeTransform slow = mode_transform_from_statevector(c);
    CHECK(fast.unitarity_error() < 1e-12);
    CHECK((fast.matrix - slow.matrix).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(two_particle_consistency_error(c) < 1e-12);
  }
}

TEST_CASE("sparse extraction accepts CX and CY that act as mode maps") {
  const Circuit c = compile_fft({9, 3, InterleaveStrategy::CxLadder});
  const ModeTransform t = sparse_mode_transform(c);
  CHECK(max_error_up_to_phase(t.matrix, dft_matrix(9)) < 1e-12);
  CHECK(two_particle_consistency_error(c) < 1e-10);
}

TEST_CASE("Gaussian evolution agrees with the statevector") {
  std::mt19937_64 rng(4);
  const unsigned n = 5;
  const Circuit c = random_mode_circuit(n, 25, rng);
  StateVector s = StateVector::basis_state(n, 0b10110);
  s.apply(c);
  const Eigen::MatrixXcd dense = one_body_correlation(s, {0, 1, 2, 3, 4});
  const GaussianState g = evolve_gaussian(
      GaussianState::from_occupations({0, 1, 1, 0, 1}), extract_mode_transform(c));
  CHECK(g.is_valid());
  CHECK((g.corr - dense).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("quadratic evolution is the exponential of the mode matrix") {
  const Eigen::MatrixXd h = hamiltonian_mode_matrix(4, 1.0, 0.3, 0.7);
  CHECK((h - h.transpose()).norm() < 1e-15);
  const QuadraticEvolution ev(h);
  const ModeTransform t = ev.transform(0.9);
  CHECK(t.unitarity_error() < 1e-12);
  // composition
  const Eigen::MatrixXcd twice = ev.transform(0.45).matrix * ev.transform(0.45).matrix;
  CHECK((twice - t.matrix).cwiseAbs().maxCoeff() < 1e-12);
}
