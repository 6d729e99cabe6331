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

#include <filesystem>
#include <string>
#include <vector>

#include "fermispec/spectral.hpp"
#include "fermispec/trotter_compare.hpp"

namespace fermispec {

/**
 * INI files with sections
 *
 *   [protocol]  N, epsilon, omega, t, nu, V, trotter_steps, environment
 *               (empty|full), initial_state (ground|occupations), rho,
 *               particles, interleave, shots, seed, quadrature_points
 *   [grid]      omega_min, omega_max, omega_count, or an explicit omegas list
 *   [output]    methods (simulate-spectral only)
 *   [compare]   epsilons, steps, continuous (compare-trotter only)
 *
 * Lists are comma separated. Unknown sections or keys and malformed values
 * raise ConfigError with the offending "section.key" in the message.
 */
struct SimulateConfig {
  ProtocolConfig protocol;
  std::vector<double> omegas;
  std::vector<std::string> methods{"exact", "gaussian"};
};

/** Method names accepted in [output] methods. */
const std::vector<std::string>& simulate_methods();

SimulateConfig parse_simulate_config(const std::string& text);
SimulateConfig load_simulate_config(const std::filesystem::path& path);

TrotterCompareConfig parse_compare_config(const std::string& text);
TrotterCompareConfig load_compare_config(const std::filesystem::path& path);

}  // namespace fermispec
