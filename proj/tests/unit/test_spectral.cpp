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

#include "fermispec/baseline.hpp"
#include "fermispec/spectral.hpp"

using namespace fermispec;

namespace {

constexpr double kPi = 3.14159265358979323846;

ProtocolConfig ring(unsigned n, double eps, double t) {
  ProtocolConfig c;
  c.N = n;
  c.epsilon = eps;
  c.t = t;
  return c;
}

}  // namespace

TEST_CASE("config validation names the field") {
  ProtocolConfig c;
  c.N = 1;
  CHECK_THROWS_WITH(c.validate(), Catch::Matchers::StartsWith("N:"));
  c = ProtocolConfig{};
  c.t = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("closed form: zero coupling, resonance and t = 0") {
  ProtocolConfig c = ring(8, 0.0, 5.0);
  CHECK(nk_exact_free(c, {-1.0, 0.0, 1.3}).values.cwiseAbs().maxCoeff() == 0.0);
  c.epsilon = 0.4;
  const Eigen::VectorXd rho = momentum_occupations(c);
  const auto k = momentum_grid(8);
  for (unsigned m = 0; m < 8; ++m) {
    const double w = 2.0 * c.nu * std::cos(k[m]);
    const double s = std::sin(c.t * c.epsilon / 2);
    CHECK(nk_exact_free(c, {w}).values(m, 0) == Catch::Approx(s * s * rho(m)).margin(1e-14));
  }
  c.t = 0.0;
  CHECK(nk_gaussian(c, {-1.0, 0.5}).values.cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("closed form needs V = 0") {
  ProtocolConfig c = ring(6, 0.1, 5.0);
  c.V = 1.0;
  CHECK_THROWS_AS(nk_exact_free(c, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(nk_gaussian(c, {0.0}), std::invalid_argument);
}

TEST_CASE("Gaussian simulation equals the closed form") {
  const std::vector<double> w = linspace(-3, 3, 17);
  for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full}) {
    ProtocolConfig c = ring(12, 0.7, 4.0);
    c.fill = fill;
    CHECK((nk_gaussian(c, w).values - nk_exact_free(c, w).values).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("kernel") {
  const Kernel k{5.0};
  CHECK(k(0.0) == Catch::Approx(25.0 / 4));
  CHECK(k(1e-9) == Catch::Approx(25.0 / 4));
  CHECK(k(2 * kPi / 5.0) < 1e-30);
  CHECK(k.window(0.0) == Catch::Approx(5.0 / 4));
  CHECK(k.window(6.0) == 0.0);
}

TEST_CASE("delta line convolved at its centre gives rho t^2 / 4") {
  DeltaSpectrum a;
  a.k = {0.0};
  a.lines = {{{0.3, 0.6}}};
  const SpectralGrid g = convolve_kernel(a, Kernel{5.0}, {0.3});
  CHECK(g.values(0, 0) == Catch::Approx(0.6 * 25.0 / 4));
}

TEST_CASE("sampled convolution approaches the symbolic one") {
  // a narrow Lorentzian of unit weight against the delta line
  SpectralGrid a;
  a.k = {0.0};
  a.omega = linspace(-40, 40, 160001);
  a.values.resize(1, static_cast<Eigen::Index>(a.omega.size()));
  const double gamma = 1e-3;
  for (std::size_t i = 0; i < a.omega.size(); ++i)
    a.values(0, static_cast<Eigen::Index>(i)) =
        2 * gamma / (a.omega[i] * a.omega[i] + gamma * gamma);
  DeltaSpectrum d;
  d.k = {0.0};
  d.lines = {{{0.0, 1.0}}};
  const std::vector<double> w{-0.5, 0.0, 0.7};
  const SpectralGrid s = convolve_kernel(a, Kernel{3.0}, w);
  const SpectralGrid e = convolve_kernel(d, Kernel{3.0}, w);
  CHECK((s.values - e.values).cwiseAbs().maxCoeff() < 2e-2);
}

TEST_CASE("integrated peak grows linearly in t") {
  DeltaSpectrum a;
  a.k = {0.0};
  a.lines = {{{0.0, 1.0}}};
  auto area = [&](double t) {
    const std::vector<double> w = linspace(-200, 200, 400001);
    const SpectralGrid g = convolve_kernel(a, Kernel{t}, w);
    return g.values.sum() * (w[1] - w[0]) / (2 * kPi);
  };
  CHECK(area(10.0) / area(5.0) == Catch::Approx(2.0).epsilon(1e-3));
  CHECK(area(5.0) == Catch::Approx(5.0 / 4).epsilon(1e-3));
}

TEST_CASE("broadening and ghosts") {
  const BroadeningGhosts pi = broadening_and_ghosts(kPi / 5.0, 5.0);
  CHECK(pi.ratio_r == Catch::Approx(1.0 / 9));
  CHECK(pi.n == 1);
  CHECK(broadening_and_ghosts(5 * kPi / 5.0, 5.0).n == 3);
  const BroadeningGhosts zero = broadening_and_ghosts(0.0, 5.0);
  CHECK(zero.delta_omega == Catch::Approx(2 * kPi / 5.0));
  CHECK(zero.ratio_r == 0.0);
  CHECK(zero.n == 1);
  CHECK(secondary_peak(kPi / 5.0, 5.0).relative_height <= 0.12);
}

TEST_CASE("strong coupling") {
  ProtocolConfig c = ring(4, kPi / 5.0, 5.0);
  c.nu = 0.0;
  const Eigen::VectorXd rho = Eigen::VectorXd::Constant(4, 0.8);
  const SpectralGrid g = strong_coupling_leading(c, rho, {0.0});
  for (unsigned m = 0; m < 4; ++m) CHECK(g.values(m, 0) == Catch::Approx(0.8));
  c.epsilon = 1e-8;
  CHECK(strong_coupling_leading(c, rho, {0.5}).values.maxCoeff() < 1e-14);
}

TEST_CASE("filled environment reads holes") {
  ProtocolConfig c = ring(6, 0.5, 5.0);
  c.initial = InitialState::Occupations;
  c.rho = {0.1, 0.2, 0.9, 1.0, 0.0, 0.4};
  const std::vector<double> w = linspace(-2.5, 2.5, 11);
  const SpectralGrid e = nk_gaussian(c, w);
  c.fill = EnvironmentFill::Full;
  for (double& r : c.rho) r = 1.0 - r;
  CHECK((nk_gaussian(c, w).values - e.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("correlation baseline: exact evolution reproduces the kernel") {
  const std::vector<double> w = linspace(-2.5, 2.5, 9);
  for (EnvironmentFill fill : {EnvironmentFill::Empty, EnvironmentFill::Full}) {
    ProtocolConfig c = ring(6, 0.1, 5.0);
    c.fill = fill;
    const SpectralGrid a = dynamical_correlation_baseline(c, w);
    CHECK((a.values - lehmann_reference(c, w).values).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("correlation baseline: one filled mode peaks at its band energy") {
  ProtocolConfig c = ring(6, 0.1, 5.0);
  c.initial = InitialState::Occupations;
  c.rho = {0, 1, 0, 0, 0, 0};
  const double centre = 2.0 * std::cos(2 * kPi / 6);
  const std::vector<double> w = linspace(centre - 1, centre + 1, 201);
  const SpectralGrid a = dynamical_correlation_baseline(c, w);
  Eigen::Index best = 0;
  a.values.row(1).maxCoeff(&best);
  CHECK(w[static_cast<std::size_t>(best)] == Catch::Approx(centre).margin(1e-12));
  for (unsigned m : {0u, 2u, 3u, 4u, 5u}) CHECK(a.values.row(m).cwiseAbs().maxCoeff() < 1e-9);
}
