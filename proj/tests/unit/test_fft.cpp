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

#include <cmath>

#include "fermispec/fft_compiler.hpp"
#include "fermispec/interleave.hpp"
#include "fermispec/mode_transform.hpp"
#include "fermispec/statevector.hpp"
#include "fermispec/tableau.hpp"

using namespace fermispec;

TEST_CASE("every strategy compiles a DFT") {
  for (unsigned n : {2u, 4u, 8u, 16u, 32u, 64u, 3u, 9u, 27u}) {
    const unsigned radix = *compilable_radix(n);
    for (InterleaveStrategy s : all_strategies()) {
      if (s == InterleaveStrategy::ImportedSequence && n != 9 && n != 27) continue;
      INFO("N=" << n << " " << strategy_name(s));
      const Circuit c = compile_fft({n, radix, s});
      CHECK(max_error_up_to_phase(sparse_mode_transform(c).matrix, dft_matrix(n)) < 1e-9);
    }
  }
}

TEST_CASE("small transforms agree with the full statevector") {
  for (unsigned n : {4u, 8u, 9u}) {
    const Circuit c = compile_fft({n, *compilable_radix(n), InterleaveStrategy::GraphDecimated});
    CHECK(two_particle_consistency_error(c) < 1e-10);
  }
}

TEST_CASE("invalid plans are refused") {
  CHECK_THROWS_AS(compile_fft({12, 2}), std::invalid_argument);
  CHECK_THROWS_AS(compile_fft({25, 5}), std::invalid_argument);
  CHECK_THROWS_AS(compile_fft({8, 2, InterleaveStrategy::ImportedSequence}),
                  std::invalid_argument);
  CHECK_FALSE(compilable_radix(6).has_value());
}

TEST_CASE("interleave permutation") {
  const InterleavePermutation p = interleave_permutation(6, 2);
  // position n q + l holds mode l M + q
  CHECK(p.sigma == std::vector<unsigned>{0, 3, 1, 4, 2, 5});
  CHECK(is_permutation(p.order(), 6));
}

TEST_CASE("all interleave strategies realise the same fermionic reordering") {
  for (auto [N, n] : std::vector<std::pair<unsigned, unsigned>>{{8, 2}, {9, 3}, {16, 4}, {27, 3}, {27, 9}}) {
    const InterleavePermutation p = interleave_permutation(N, n);
    Eigen::MatrixXcd ref;
    for (InterleaveStrategy s : all_strategies()) {
      if (s == InterleaveStrategy::ImportedSequence && N != 9 && N != 27) continue;
      INFO("N=" << N << " n=" << n << " " << strategy_name(s));
      const Eigen::MatrixXcd t =
          sparse_mode_transform(materialize_layout(interleave_circuit(p, s))).matrix;
      if (ref.size() == 0) ref = t;
      CHECK((t - ref).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("imported 9-mode listing equals its CZ graph") {
  const InterleavePermutation p = interleave_permutation(9, 3);
  CHECK(verify_equivalence(imported_interleave_listing(9), interleave_cz_graph(p)));
  CHECK_THROWS(imported_interleave_listing(8));
}

TEST_CASE("ground-state preparation builds the filled Fermi sea") {
  const unsigned n = 8;
  const auto filled = negative_energy_momenta(n, 1.0);
  CHECK(filled.size() == 3);
  const Circuit c = ground_state_prep_circuit(n, filled);
  StateVector s(n);
  s.apply(c);
  const std::vector<unsigned> modes = c.output_layout();
  const Eigen::MatrixXcd corr = one_body_correlation(s, modes);
  double err = 0.0;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      cplx want = 0.0;
      for (unsigned m : filled)
        want += std::polar(1.0, 2.0 * M_PI * m * (double(j) - i) / n) / double(n);
      err = std::max(err, std::abs(corr(i, j) - want));
    }
  CHECK(err < 1e-12);
}
