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
#include <random>

#include "fermispec/baseline.hpp"
#include "fermispec/protocol.hpp"
#include "fermispec/trotter_compare.hpp"

using namespace fermispec;

namespace {

FockState random_fock(unsigned modes, unsigned particles, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  FockState s{SectorBasis(modes, particles), {}};
  s.amp.resize(static_cast<Eigen::Index>(s.basis.size()));
  for (auto& a : s.amp) a = cplx(g(rng), g(rng));
  s.amp.normalize();
  return s;
}

double max_abs_diff(const SpectralGrid& a, const SpectralGrid& b) {
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("step factors come in the fixed order") {
  ProtocolConfig c;
  c.N = 4;
  c.V = 1.0;
  c.omega = 0.3;
  const auto terms = trotter_step_terms(c, 0.5, true);
  REQUIRE(terms.size() == 4 + 4 + 4 + 4);
  using K = TrotterTerm::Kind;
  for (int i = 0; i < 2; ++i) {
    CHECK(terms[i].kind == K::Hop);
    CHECK(terms[i].a == 4 * i);
    CHECK(terms[i].angle == Catch::Approx(0.5));
  }
  for (int i = 2; i < 4; ++i) CHECK(terms[i].a == 4 * (i - 2) + 2);
  for (int i = 4; i < 8; ++i) CHECK(terms[i].kind == K::Density);
  for (int i = 8; i < 12; ++i) {
    CHECK(terms[i].kind == K::Hop);
    CHECK(terms[i].b == terms[i].a + 1);
    CHECK(terms[i].angle == Catch::Approx(0.025));
  }
  for (int i = 12; i < 16; ++i) {
    CHECK(terms[i].kind == K::Number);
    CHECK(terms[i].a % 2 == 1);
  }
  c.V = 0.0;
  c.omega = 0.0;
  CHECK(trotter_step_terms(c, 0.5, true).size() == 8);
  CHECK(trotter_step_terms(c, 0.5, false).size() == 4);
}

TEST_CASE("gate realisation of the step matches the sector action") {
  std::mt19937_64 rng(5);
  ProtocolConfig c;
  c.N = 3;
  c.V = 0.7;
  c.omega = -0.4;
  c.epsilon = 0.9;
  const auto terms = trotter_step_terms(c, 0.3, true);
  FockState s = random_fock(6, 3, rng);
  StateVector psi = s.basis.embed(s.amp);
  psi.apply(trotter_terms_circuit(terms, 6));
  apply_terms(s, terms);
  // the gates fix the phase only up to a global factor
  CHECK(std::abs(s.basis.restrict(psi).dot(s.amp)) == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("product formula converges to the exact evolution at first order") {
  std::mt19937_64 rng(6);
  ProtocolConfig c;
  c.N = 4;
  c.V = 1.3;
  c.omega = 0.2;
  c.epsilon = 0.8;
  const FockState s0 = random_fock(8, 4, rng);
  const SparseMatrixC h = sector_matrix(protocol_hamiltonian(c, true), s0.basis);
  const Eigen::VectorXcd exact = chebyshev_evolve(h, s0.amp, 2.0);
  auto error = [&](unsigned steps) {
    FockState s = s0;
    const auto terms = trotter_step_terms(c, 2.0 / steps, true);
    for (unsigned i = 0; i < steps; ++i) apply_terms(s, terms);
    return (s.amp - exact).norm();
  };
  const double e1 = error(50), e2 = error(100);
  CHECK(e2 < 0.1);
  CHECK(e1 / e2 == Catch::Approx(2.0).epsilon(0.1));
}

TEST_CASE("ladder operators and correlations") {
  std::mt19937_64 rng(7);
  const FockState s = random_fock(6, 2, rng);
  const std::vector<unsigned> modes{0, 1, 2, 3, 4, 5};
  const Eigen::MatrixXcd corr = one_body_correlation(s, modes);
  CHECK(corr.trace().real() == Catch::Approx(2.0));
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(6);
  e(1) = 1.0;
  e(4) = cplx(0.0, 1.0);
  const FockState a = annihilate(s, e);
  CHECK(a.basis.particles() == 1);
  // |sum coef_j c_j psi|^2 = sum conj(coef_i) coef_j <c_i^dag c_j>
  CHECK(std::norm(inner(a, a)) ==
        Catch::Approx(std::norm(e.dot(corr * e))).epsilon(1e-10));
  const FockState back = create(a, e);
  CHECK(back.basis.particles() == 2);
}

TEST_CASE("ground state by diagonalization over all sectors") {
  ProtocolConfig c;
  c.N = 9;
  c.V = 4.0;
  const SystemGroundState g = initial_system_state(c);
  CHECK(g.state.basis.particles() == 3);
  CHECK(g.energy == Catch::Approx(-4.18968).margin(1e-5));
  c.V = 0.0;
  c.N = 8;
  const SystemGroundState f = initial_system_state(c);
  const Eigen::VectorXd rho = momentum_occupations(f.state);
  CHECK(rho.sum() == Catch::Approx(f.state.basis.particles()));
  CHECK((rho - momentum_occupations(c)).cwiseAbs().maxCoeff() < 1e-10);
  c.N = 15;
  c.V = 1.0;
  CHECK_THROWS_AS(initial_system_state(c), ConfigError);
}

TEST_CASE("filled environment adds N particles") {
  std::mt19937_64 rng(8);
  const FockState sys = random_fock(4, 2, rng);
  const FockState full = couple_to_environment(sys, EnvironmentFill::Full);
  const FockState empty = couple_to_environment(sys, EnvironmentFill::Empty);
  CHECK(full.basis.num_modes() == 8);
  CHECK(full.basis.particles() == 6);
  CHECK(empty.basis.particles() == 2);
  CHECK(full.norm() == Catch::Approx(1.0));
  const std::vector<unsigned> sys_modes{0, 2, 4, 6};
  const Eigen::MatrixXcd cs = one_body_correlation(sys, {0, 1, 2, 3});
  CHECK((one_body_correlation(full, sys_modes) - cs).norm() < 1e-12);
  CHECK((one_body_correlation(empty, sys_modes) - cs).norm() < 1e-12);
}

TEST_CASE("circuit protocol agrees with the sector engine when interacting") {
  const std::vector<double> w{-1.5, 0.0, 0.8};
  for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full}) {
    ProtocolConfig c;
    c.N = 4;
    c.V = 2.0;
    c.epsilon = 0.6;
    c.fill = fill;
    c.trotter_steps = 5;
    CHECK(max_abs_diff(run_circuit_protocol(c, w), nk_many_body(c, w)) < 1e-10);
  }
}

TEST_CASE("circuit protocol agrees with the Gaussian simulation") {
  const std::vector<double> w{-2.0, -1.0, 0.0, 1.0, 2.0};
  ProtocolConfig c;
  c.N = 6;
  c.epsilon = 0.5;
  c.trotter_steps = 400;
  for (InterleaveStrategy s : {InterleaveStrategy::GraphDecimated, InterleaveStrategy::LocalFswap}) {
    c.interleave = s;
    CHECK(max_abs_diff(run_circuit_protocol(c, w), nk_gaussian(c, w)) < 1e-4);
  }
}

TEST_CASE("outputs are occupations") {
  const std::vector<double> w = linspace(-3, 3, 7);
  for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full}) {
    ProtocolConfig c;
    c.N = 5;
    c.V = 3.0;
    c.epsilon = 1.0;
    c.fill = fill;
    c.trotter_steps = 3;
    const SpectralGrid g = nk_many_body(c, w);
    CHECK(g.min() >= -1e-12);
    CHECK(g.max() <= 1 + 1e-12);
  }
}

TEST_CASE("sampled readout") {
  ProtocolConfig c;
  c.N = 4;
  c.epsilon = 0.8;
  c.trotter_steps = 20;
  const std::vector<double> w{-2.0, 0.0, 2.0};
  const SpectralGrid exact = run_circuit_protocol(c, w);
  c.shots = 4000;
  c.seed = 3;
  const SpectralGrid a = run_circuit_protocol(c, w);
  CHECK(max_abs_diff(a, exact) < 0.04);
  CHECK(max_abs_diff(a, run_circuit_protocol(c, w)) == 0.0);
}

TEST_CASE("register cap and invalid runs") {
  ProtocolConfig c;
  c.N = 11;
  c.trotter_steps = 2;
  CHECK_THROWS_AS(protocol_circuit(c, 0.0), ConfigError);
  c.N = 4;
  c.trotter_steps = 0;
  CHECK_THROWS_AS(protocol_circuit(c, 0.0), ConfigError);
}

TEST_CASE("correlation baseline flags negative samples at coarse steps") {
  ProtocolConfig c;
  c.N = 6;
  c.V = 2.0;
  c.trotter_steps = 16;
  const std::vector<double> w = linspace(-3, 3, 25);
  const SpectralGrid g = dynamical_correlation_baseline(c, w);
  REQUIRE(g.notes.count("negative_samples"));
  CHECK(std::stoul(g.notes.at("negative_samples")) == g.count_below(-1e-12));
}

TEST_CASE("least squares scale") {
  Eigen::MatrixXd a(2, 2), r(2, 2);
  a << 1, 2, 3, 4;
  r = 2.5 * a;
  CHECK(least_squares_scale(a, r) == Catch::Approx(2.5));
  CHECK(least_squares_scale(Eigen::MatrixXd::Zero(2, 2), r) == 0.0);
}

TEST_CASE("compare-trotter on a small ring") {
  TrotterCompareConfig cfg;
  cfg.base.N = 4;
  cfg.base.V = 1.0;
  cfg.epsilons = {0.1};
  cfg.steps = {8, 64};
  cfg.omegas = linspace(-3, 3, 13);
  const TrotterCompareResult r = compare_trotter(cfg);
  REQUIRE(r.rows.size() == 6);
  for (const auto& row : r.rows)
    if (row.method == "environment") CHECK(row.occupations_in_unit_interval);
  auto err = [&](const std::string& m, unsigned steps) {
    for (const auto& row : r.rows)
      if (row.method == m && row.steps == steps) return row.mean_abs_error;
    FAIL("missing row");
    return 0.0;
  };
  CHECK(err("environment", 64) < err("environment", 8));
  CHECK(err("correlation", 64) < err("correlation", 8));
  CHECK(err("correlation", 0) < 1e-6);
}
