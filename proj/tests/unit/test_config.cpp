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

#include "fermispec/config.hpp"

using namespace fermispec;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("simulate config reads every protocol key") {
  const SimulateConfig c = parse_simulate_config(R"(
[protocol]
N = 6
epsilon = 0.25
t = 4
nu = 0.5
V = 1.5
trotter_steps = 40
environment = full
initial_state = occupations
rho = 0, 1, 0.5, 0, 1, 0
particles = 2
interleave = cx-ladder
shots = 100
seed = 9
quadrature_points = 101

[grid]
omega_min = -1
omega_max = 1
omega_count = 5

[output]
methods = exact, circuit
)");
  const ProtocolConfig& p = c.protocol;
  CHECK(p.N == 6);
  CHECK(p.epsilon == 0.25);
  CHECK(p.t == 4.0);
  CHECK(p.nu == 0.5);
  CHECK(p.V == 1.5);
  CHECK(p.trotter_steps == 40);
  CHECK(p.fill == EnvironmentFill::Full);
  CHECK(p.initial == InitialState::Occupations);
  CHECK(p.rho == std::vector<double>{0, 1, 0.5, 0, 1, 0});
  CHECK(p.particles == 2);
  CHECK(p.interleave == InterleaveStrategy::CxLadder);
  CHECK(p.shots == 100);
  CHECK(p.seed == 9);
  CHECK(p.quadrature_points == 101);
  CHECK(c.omegas == std::vector<double>{-1, -0.5, 0, 0.5, 1});
  CHECK(c.methods == std::vector<std::string>{"exact", "circuit"});
}

TEST_CASE("defaults and explicit omega lists") {
  const SimulateConfig d = parse_simulate_config("[protocol]\nN = 4\n");
  CHECK(d.omegas.size() == 26);
  CHECK(d.omegas.front() == -3.0);
  CHECK(d.methods == std::vector<std::string>{"exact", "gaussian"});
  const SimulateConfig e =
      parse_simulate_config("[grid]\nomegas = 0.5, -0.25\n");
  CHECK(e.omegas == std::vector<double>{0.5, -0.25});
}

TEST_CASE("errors name the offending key") {
  auto fails_with = [](const std::string& text, const std::string& what) {
    CHECK_THROWS_WITH(parse_simulate_config(text), ContainsSubstring(what));
  };
  fails_with("[protocol]\nepsilonn = 1\n", "protocol.epsilonn: unknown key");
  fails_with("[nonsense]\nx = 1\n", "nonsense: unknown section");
  fails_with("[protocol]\nN = six\n", "protocol.N: expected an integer");
  fails_with("[protocol]\nN = -3\n", "protocol.N: must not be negative");
  fails_with("[protocol]\nepsilon = 0.1x\n", "protocol.epsilon: expected a number");
  fails_with("[protocol]\nenvironment = half\n", "protocol.environment");
  fails_with("[protocol]\ninterleave = zigzag\n", "protocol.interleave");
  fails_with("[protocol]\nN = 1\n", "protocol.N:");
  fails_with("[protocol]\nN = 3\ninitial_state = occupations\nrho = 1, 0\n",
             "protocol.rho:");
  fails_with("[protocol]\nquadrature_points = 10\n", "protocol.quadrature_points");
  fails_with("[grid]\nomega_count = 0\n", "grid.omega_count");
  fails_with("[grid]\nomegas = 1\nomega_min = 0\n", "grid.omegas");
  fails_with("[output]\nmethods = magic\n", "output.methods: unknown method 'magic'");
  fails_with("[compare]\nsteps = 4\n", "compare: unknown section");
  CHECK_THROWS_AS(parse_simulate_config("[protocol\nN = 3\n"), ConfigError);
}

TEST_CASE("compare config") {
  const TrotterCompareConfig c = parse_compare_config(R"(
[protocol]
N = 5
[compare]
epsilons = 0.1, 0.01
steps = 4, 8
continuous = false
)");
  CHECK(c.base.N == 5);
  CHECK(c.epsilons == std::vector<double>{0.1, 0.01});
  CHECK(c.steps == std::vector<unsigned>{4, 8});
  CHECK_FALSE(c.continuous);
  CHECK_THROWS_WITH(parse_compare_config("[compare]\nsteps = 0\n"),
                    ContainsSubstring("compare.steps"));
  CHECK_THROWS_WITH(parse_compare_config("[compare]\ncontinuous = maybe\n"),
                    ContainsSubstring("compare.continuous"));
  CHECK_THROWS_WITH(parse_compare_config("[output]\nmethods = exact\n"),
                    ContainsSubstring("output: unknown section"));
}

TEST_CASE("missing file") {
  CHECK_THROWS_WITH(load_simulate_config("/nonexistent/x.ini"),
                    ContainsSubstring("cannot open"));
}
